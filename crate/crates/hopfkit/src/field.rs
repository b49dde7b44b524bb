//! Exact scalar arithmetic over the rationals or a prime field GF(p).
//!
//! Every computation in this crate fixes one field up front. Rationals are
//! arbitrary-precision fractions kept in lowest terms with positive
//! denominator; prime-field values are residues in `[0, p)`. Characteristic 2
//! is rejected at construction since the algebras built here need 2 to be
//! invertible.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

/// The base field of a computation: `Q` or `GF(p)` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Builds `GF(p)`. Requires `2 < p < 2^31` and `p` prime.
    pub fn prime_field(p: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo(p));
        }
        if p < 2 || p >= (1u32 << 31) {
            return Err(Error::ModulusOutOfRange(p as u64));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    /// Parses `q` or `gf:<p>`.
    pub fn parse(s: &str) -> Result<Self> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u32 = p
                .parse()
                .map_err(|_| Error::InvalidFieldSpec(s.to_string()))?;
            return FieldSpec::prime_field(p);
        }
        Err(Error::InvalidFieldSpec(s.to_string()))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar {
                field: *self,
                value: Value::Rat(BigRational::zero()),
            },
            FieldSpec::PrimeField(_) => Scalar {
                field: *self,
                value: Value::Mod(0),
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar {
                field: *self,
                value: Value::Rat(BigRational::from_integer(BigInt::from(v))),
            },
            FieldSpec::PrimeField(p) => {
                let p = *p as i64;
                Scalar {
                    field: *self,
                    value: Value::Mod(v.rem_euclid(p) as u64),
                }
            }
        }
    }

    /// Ratio `a/b`; errors when `b` is zero in the field.
    pub fn ratio(&self, a: i64, b: i64) -> Result<Scalar> {
        let bs = self.from_i64(b);
        if bs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.from_i64(a).div(&bs))
    }

    /// Parses a scalar in the field's text form: `n` or `p/q` over the
    /// rationals, a decimal residue in `[0, p)` over GF(p).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(s.to_string(), self.to_string());
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar {
                    field: *self,
                    value: Value::Rat(BigRational::new(num, den)),
                })
            }
            FieldSpec::PrimeField(p) => {
                let v: u64 = s.trim().parse().map_err(|_| bad())?;
                if v >= *p as u64 {
                    return Err(bad());
                }
                Ok(Scalar {
                    field: *self,
                    value: Value::Mod(v),
                })
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rat(BigRational),
    Mod(u64),
}

/// An exact field element tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    value: Value,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_zero(),
            Value::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_one(),
            Value::Mod(v) => *v == 1,
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field, other.field,
            "scalar field mismatch (internal invariant)"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.modulus();
                Value::Mod((a + b) % p)
            }
            _ => unreachable!(),
        };
        Scalar {
            field: self.field,
            value,
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a) => {
                let p = self.modulus();
                Value::Mod(if *a == 0 { 0 } else { p - a })
            }
        };
        Scalar {
            field: self.field,
            value,
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.modulus();
                Value::Mod((a * b) % p)
            }
            _ => unreachable!(),
        };
        Scalar {
            field: self.field,
            value,
        }
    }

    /// Multiplicative inverse; `None` on zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(a.recip()),
            Value::Mod(a) => Value::Mod(mod_inverse(*a, self.modulus())),
        };
        Some(Scalar {
            field: self.field,
            value,
        })
    }

    /// Panics on division by zero; callers check first.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    fn modulus(&self) -> u64 {
        match self.field {
            FieldSpec::PrimeField(p) => p as u64,
            FieldSpec::Rationals => unreachable!(),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime, a != 0 mod p
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Mod(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_rejected() {
        assert!(matches!(
            FieldSpec::prime_field(2),
            Err(Error::CharacteristicTwo(2))
        ));
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(FieldSpec::prime_field(9), Err(Error::NotPrime(9))));
        assert!(matches!(
            FieldSpec::prime_field(15),
            Err(Error::NotPrime(15))
        ));
    }

    #[test]
    fn parse_field_specs() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(
            FieldSpec::parse("gf:7").unwrap(),
            FieldSpec::PrimeField(7)
        );
        assert!(FieldSpec::parse("gf:2").is_err());
        assert!(FieldSpec::parse("r64").is_err());
    }

    #[test]
    fn rational_text_form() {
        let q = FieldSpec::Rationals;
        let half = q.ratio(1, 2).unwrap();
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(q.parse_scalar("1/2").unwrap(), half);
        assert_eq!(q.parse_scalar("-3/6").unwrap(), q.ratio(-1, 2).unwrap());
        assert_eq!(q.parse_scalar("4").unwrap().to_string(), "4");
        // negative denominator normalizes to positive
        assert_eq!(q.parse_scalar("1/-2").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn gf_text_form() {
        let f = FieldSpec::prime_field(7).unwrap();
        assert_eq!(f.parse_scalar("5").unwrap().to_string(), "5");
        assert!(f.parse_scalar("7").is_err());
        assert!(f.parse_scalar("-1").is_err());
        assert_eq!(f.from_i64(-1).to_string(), "6");
    }

    #[test]
    fn field_axioms_sampled() {
        for field in [FieldSpec::Rationals, FieldSpec::prime_field(7).unwrap()] {
            let sample: Vec<Scalar> = (-3..=3).map(|v| field.from_i64(v)).collect();
            for a in &sample {
                for b in &sample {
                    for c in &sample {
                        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                        assert_eq!(a.mul(b), b.mul(a));
                    }
                    if !b.is_zero() {
                        assert!(b.mul(&b.inv().unwrap()).is_one());
                    }
                }
                assert!(a.add(&a.neg()).is_zero());
            }
        }
    }

    #[test]
    fn mod_inverse_small() {
        let f = FieldSpec::prime_field(13).unwrap();
        for v in 1..13 {
            let s = f.from_i64(v);
            assert!(s.mul(&s.inv().unwrap()).is_one());
        }
    }
}
