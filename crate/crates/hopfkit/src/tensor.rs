//! Sparse elements of `H^{⊗k}` and the leg calculus.
//!
//! Leg positions in the public API are 1-based, matching the usual leg
//! notation: `leg_embed(r, &[2, 1], 2)` is `R₂₁`, `leg_embed(r, &[3, 1], 3)`
//! is `R₃₁`. A 0-leg element is a bare scalar, so counit application composes
//! uniformly.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{FiniteDimHopf, HopfRef, Tensor2};
use crate::linalg::{solve_sparse, SparseVec};
use crate::report::{VerificationReport, Witness};

/// Default cap on `dim^legs` for inversion and centrality scans.
pub const TENSOR_SIZE_CAP: usize = 65536;

/// Sparse element of `H^{⊗k}`: a map from basis multi-indices to scalars with
/// no stored zeros.
#[derive(Debug, Clone)]
pub struct TensorElement {
    algebra: HopfRef,
    legs: usize,
    coeffs: BTreeMap<Vec<u32>, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.legs == other.legs
            && self.algebra.dim() == other.algebra.dim()
            && self.algebra.field() == other.algebra.field()
            && self.coeffs == other.coeffs
    }
}

impl Eq for TensorElement {}

impl TensorElement {
    pub fn zero(algebra: HopfRef, legs: usize) -> Self {
        TensorElement {
            algebra,
            legs,
            coeffs: BTreeMap::new(),
        }
    }

    /// `1^{⊗legs}` (the unit may be a sum of basis elements).
    pub fn one(algebra: HopfRef, legs: usize) -> Self {
        let mut out = TensorElement::zero(algebra.clone(), legs);
        let unit = algebra.unit_vec();
        let mut stack: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), algebra.field().one())];
        for _ in 0..legs {
            let mut next = Vec::new();
            for (key, c) in &stack {
                for (i, u) in unit.iter() {
                    let mut k2 = key.clone();
                    k2.push(i as u32);
                    next.push((k2, c.mul(u)));
                }
            }
            stack = next;
        }
        for (key, c) in stack {
            out.add_term(key, &c);
        }
        out
    }

    pub fn basis(algebra: HopfRef, index: &[u32]) -> Result<Self> {
        let dim = algebra.dim();
        for &i in index {
            if i as usize >= dim {
                return Err(Error::IndexOutOfRange {
                    index: i as usize,
                    dim,
                });
            }
        }
        let one = algebra.field().one();
        let mut out = TensorElement::zero(algebra, index.len());
        out.coeffs.insert(index.to_vec(), one);
        Ok(out)
    }

    /// 0-leg element holding a bare scalar.
    pub fn scalar(algebra: HopfRef, value: Scalar) -> Self {
        let mut out = TensorElement::zero(algebra, 0);
        out.add_term(Vec::new(), &value);
        out
    }

    /// 1-leg element from a coefficient vector.
    pub fn from_vec(algebra: HopfRef, v: &SparseVec) -> Self {
        let mut out = TensorElement::zero(algebra, 1);
        for (i, c) in v.iter() {
            out.add_term(vec![i as u32], c);
        }
        out
    }

    pub fn from_tensor2(algebra: HopfRef, t: &Tensor2) -> Self {
        let mut out = TensorElement::zero(algebra, 2);
        for (&(i, j), c) in t.iter() {
            out.add_term(vec![i, j], c);
        }
        out
    }

    pub fn from_terms<I>(algebra: HopfRef, legs: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let dim = algebra.dim();
        let mut out = TensorElement::zero(algebra, legs);
        for (key, c) in terms {
            if key.len() != legs {
                return Err(Error::DimensionMismatch(format!(
                    "term has {} legs, element has {legs}",
                    key.len()
                )));
            }
            for &i in &key {
                if i as usize >= dim {
                    return Err(Error::IndexOutOfRange {
                        index: i as usize,
                        dim,
                    });
                }
            }
            out.add_term(key, &c);
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &HopfRef {
        &self.algebra
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, key: &[u32]) -> Scalar {
        self.coeffs
            .get(key)
            .cloned()
            .unwrap_or_else(|| self.algebra.field().zero())
    }

    /// 2-leg element viewed as a raw 2-tensor.
    pub fn to_tensor2(&self) -> Result<Tensor2> {
        if self.legs != 2 {
            return Err(Error::DimensionMismatch(format!(
                "expected 2 legs, got {}",
                self.legs
            )));
        }
        Ok(self
            .coeffs
            .iter()
            .map(|(k, v)| ((k[0], k[1]), v.clone()))
            .collect())
    }

    /// 1-leg element viewed as a coefficient vector.
    pub fn to_vec(&self) -> Result<SparseVec> {
        if self.legs != 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected 1 leg, got {}",
                self.legs
            )));
        }
        SparseVec::from_entries(
            self.algebra.dim(),
            self.coeffs.iter().map(|(k, v)| (k[0] as usize, v.clone())),
        )
    }

    fn add_term(&mut self, key: Vec<u32>, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let cur = match self.coeffs.remove(&key) {
            Some(old) => old.add(v),
            None => v.clone(),
        };
        if !cur.is_zero() {
            self.coeffs.insert(key, cur);
        }
    }

    fn same_algebra(&self, other: &TensorElement) -> Result<()> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) {
            return Err(Error::Precondition(
                "tensor elements live over different algebra instances".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.same_algebra(other)?;
        if self.legs != other.legs {
            return Err(Error::DimensionMismatch("leg count".into()));
        }
        let mut out = self.clone();
        for (k, v) in other.coeffs.iter() {
            out.add_term(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.add(&other.scale(&self.algebra.field().from_i64(-1)))
    }

    pub fn scale(&self, by: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(self.algebra.clone(), self.legs);
        if by.is_zero() {
            return out;
        }
        for (k, v) in self.coeffs.iter() {
            out.coeffs.insert(k.clone(), v.mul(by));
        }
        out
    }

    /// Componentwise (legwise) product in `H^{⊗k}`.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.same_algebra(other)?;
        if self.legs != other.legs {
            return Err(Error::DimensionMismatch(format!(
                "product of {}-leg and {}-leg elements",
                self.legs, other.legs
            )));
        }
        let h = &self.algebra;
        let mut out = TensorElement::zero(self.algebra.clone(), self.legs);
        for (ka, va) in self.coeffs.iter() {
            for (kb, vb) in other.coeffs.iter() {
                let coeff = va.mul(vb);
                if coeff.is_zero() {
                    continue;
                }
                // expand the legwise basis products
                let mut partial: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), coeff)];
                for l in 0..self.legs {
                    let prod = h.mul_basis(ka[l] as usize, kb[l] as usize);
                    if prod.is_zero() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.nnz());
                    for (key, c) in &partial {
                        for (r, m) in prod.iter() {
                            let mut k2 = key.clone();
                            k2.push(r as u32);
                            next.push((k2, c.mul(m)));
                        }
                    }
                    partial = next;
                }
                for (key, c) in partial {
                    out.add_term(key, &c);
                }
            }
        }
        Ok(out)
    }

    /// Places leg `i` of `self` at position `targets[i]` (1-based) of a
    /// `k`-leg element, with the unit on the remaining legs.
    /// `leg_embed(r, &[2, 1], 2)` is `R₂₁`; `leg_embed(r, &[3, 1], 3)` is `R₃₁`.
    pub fn leg_embed(&self, targets: &[usize], k: usize) -> Result<TensorElement> {
        if targets.len() != self.legs {
            return Err(Error::DimensionMismatch(format!(
                "{} targets for {}-leg element",
                targets.len(),
                self.legs
            )));
        }
        let mut seen = vec![false; k];
        for &t in targets {
            if t == 0 || t > k {
                return Err(Error::LegOutOfRange { leg: t, legs: k });
            }
            if seen[t - 1] {
                return Err(Error::DuplicateLeg(t));
            }
            seen[t - 1] = true;
        }
        let unit = self.algebra.unit_vec();
        let free: Vec<usize> = (0..k).filter(|p| !seen[*p]).collect();
        let mut out = TensorElement::zero(self.algebra.clone(), k);
        for (key, c) in self.coeffs.iter() {
            let mut stack: Vec<(Vec<u32>, Scalar)> = vec![{
                let mut base = vec![0u32; k];
                for (l, &t) in targets.iter().enumerate() {
                    base[t - 1] = key[l];
                }
                (base, c.clone())
            }];
            for &p in &free {
                let mut next = Vec::with_capacity(stack.len() * unit.nnz());
                for (base, coeff) in &stack {
                    for (i, u) in unit.iter() {
                        let mut b2 = base.clone();
                        b2[p] = i as u32;
                        next.push((b2, coeff.mul(u)));
                    }
                }
                stack = next;
            }
            for (b, coeff) in stack {
                out.add_term(b, &coeff);
            }
        }
        Ok(out)
    }

    /// `x₂₁` for a 2-leg element (general leg permutation via `leg_embed`).
    pub fn swap21(&self) -> Result<TensorElement> {
        self.leg_embed(&[2, 1], 2)
    }

    /// Applies Δ at the given 1-based leg, splitting it into legs
    /// `(leg, leg+1)`.
    pub fn apply_coproduct_leg(&self, leg: usize) -> Result<TensorElement> {
        if leg == 0 || leg > self.legs {
            return Err(Error::LegOutOfRange {
                leg,
                legs: self.legs,
            });
        }
        let h = &self.algebra;
        let mut out = TensorElement::zero(self.algebra.clone(), self.legs + 1);
        for (key, c) in self.coeffs.iter() {
            let b = key[leg - 1] as usize;
            for (&(p, q), d) in h.comul_basis(b).iter() {
                let mut k2 = Vec::with_capacity(self.legs + 1);
                k2.extend_from_slice(&key[..leg - 1]);
                k2.push(p);
                k2.push(q);
                k2.extend_from_slice(&key[leg..]);
                out.add_term(k2, &c.mul(d));
            }
        }
        Ok(out)
    }

    /// Applies ε at the given leg, removing it.
    pub fn apply_counit_leg(&self, leg: usize) -> Result<TensorElement> {
        if leg == 0 || leg > self.legs {
            return Err(Error::LegOutOfRange {
                leg,
                legs: self.legs,
            });
        }
        let h = &self.algebra;
        let mut out = TensorElement::zero(self.algebra.clone(), self.legs - 1);
        for (key, c) in self.coeffs.iter() {
            let e = h.counit_basis(key[leg - 1] as usize);
            let coeff = c.mul(e);
            if coeff.is_zero() {
                continue;
            }
            let mut k2 = Vec::with_capacity(self.legs - 1);
            k2.extend_from_slice(&key[..leg - 1]);
            k2.extend_from_slice(&key[leg..]);
            out.add_term(k2, &coeff);
        }
        Ok(out)
    }

    /// Applies `S` (or `S⁻¹`) at the given leg.
    pub fn apply_antipode_leg(&self, leg: usize, inverse: bool) -> Result<TensorElement> {
        if leg == 0 || leg > self.legs {
            return Err(Error::LegOutOfRange {
                leg,
                legs: self.legs,
            });
        }
        let h = &self.algebra;
        let m = if inverse {
            h.antipode_inv_matrix()
        } else {
            h.antipode_matrix()
        };
        let mut out = TensorElement::zero(self.algebra.clone(), self.legs);
        for (key, c) in self.coeffs.iter() {
            let b = key[leg - 1] as usize;
            for l in 0..h.dim() {
                let s = m.at(l, b);
                if s.is_zero() {
                    continue;
                }
                let mut k2 = key.clone();
                k2[leg - 1] = l as u32;
                out.add_term(k2, &c.mul(s));
            }
        }
        Ok(out)
    }

    fn flat_size(&self) -> Result<usize> {
        let dim = self.algebra.dim();
        let mut size = 1usize;
        for _ in 0..self.legs {
            size = size
                .checked_mul(dim)
                .filter(|&s| s <= TENSOR_SIZE_CAP)
                .ok_or(Error::SizeCap {
                    size: usize::MAX,
                    cap: TENSOR_SIZE_CAP,
                })?;
        }
        Ok(size)
    }

    fn flat_of(&self, key: &[u32]) -> usize {
        let dim = self.algebra.dim();
        key.iter().fold(0usize, |acc, &i| acc * dim + i as usize)
    }

    fn unflat(&self, mut flat: usize) -> Vec<u32> {
        let dim = self.algebra.dim();
        let mut key = vec![0u32; self.legs];
        for slot in key.iter_mut().rev() {
            *slot = (flat % dim) as u32;
            flat /= dim;
        }
        key
    }

    /// Left multiplication by `self` applied to the basis tensor `flat`.
    fn mul_basis_flat(&self, flat: usize) -> SparseVec {
        let dim = self.algebra.dim();
        let e = self.unflat(flat);
        let mut out = SparseVec::zero(dim.pow(self.legs as u32));
        for (key, c) in self.coeffs.iter() {
            let mut partial: Vec<(usize, Scalar)> = vec![(0, c.clone())];
            for l in 0..self.legs {
                let prod = self.algebra.mul_basis(key[l] as usize, e[l] as usize);
                if prod.is_zero() {
                    partial.clear();
                    break;
                }
                let mut next = Vec::with_capacity(partial.len() * prod.nnz());
                for (acc, coeff) in &partial {
                    for (r, m) in prod.iter() {
                        next.push((acc * dim + r, coeff.mul(m)));
                    }
                }
                partial = next;
            }
            for (idx, coeff) in partial {
                out.add_to(idx, &coeff).expect("flat index in range");
            }
        }
        out
    }

    /// Inverts `self` in `H^{⊗k}` by solving against the left-multiplication
    /// matrix, then verifying the two-sided inverse law. `Ok(None)` when not
    /// invertible; errors when `dim^k` exceeds the size cap.
    pub fn invert(&self) -> Result<Option<TensorElement>> {
        if self.legs == 0 {
            let c = self.coeff(&[]);
            return Ok(c.inv().map(|i| TensorElement::scalar(self.algebra.clone(), i)));
        }
        let size = self.flat_size()?;
        let one = TensorElement::one(self.algebra.clone(), self.legs);
        let mut rhs = SparseVec::zero(size);
        for (key, c) in one.coeffs.iter() {
            rhs.add_to(self.flat_of(key), c)?;
        }
        let Some(x) = solve_sparse(size, |v| self.mul_basis_flat(v), &rhs)? else {
            return Ok(None);
        };
        let inv = TensorElement::from_terms(
            self.algebra.clone(),
            self.legs,
            x.iter().map(|(i, c)| (self.unflat(i), c.clone())),
        )?;
        // verify both sides
        if self.mul(&inv)? != one || inv.mul(self)? != one {
            return Ok(None);
        }
        Ok(Some(inv))
    }

    /// Checks that `self` commutes with every basis tensor of `H^{⊗k}`.
    /// The witness is the first failing tuple in lexicographic order.
    pub fn is_central(&self) -> VerificationReport {
        VerificationReport::timed(|| {
            let size = match self.flat_size() {
                Ok(s) => s,
                Err(e) => {
                    return VerificationReport::fail(
                        "central",
                        Witness::new("size-cap", e.to_string(), ""),
                    )
                }
            };
            for flat in 0..size {
                let key = self.unflat(flat);
                let e = TensorElement::basis(self.algebra.clone(), &key).expect("in range");
                let xe = self.mul(&e).expect("same algebra");
                let ex = e.mul(self).expect("same algebra");
                if xe != ex {
                    return VerificationReport::fail(
                        "central",
                        Witness::new(self.fmt_key(&key), xe, ex),
                    );
                }
            }
            VerificationReport::pass("central")
        })
    }

    pub fn fmt_key(&self, key: &[u32]) -> String {
        if key.is_empty() {
            return "()".into();
        }
        key.iter()
            .map(|&i| self.algebra.basis_label(i as usize).to_string())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                if k.is_empty() {
                    return c.to_string();
                }
                let lbl = self.fmt_key(k);
                if c.is_one() {
                    lbl
                } else {
                    format!("{c}·({lbl})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Tensor (outer) product placing `x`'s legs before `y`'s.
pub fn outer(x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
    if !Arc::ptr_eq(x.algebra(), y.algebra()) {
        return Err(Error::Precondition(
            "outer product of elements over different algebra instances".into(),
        ));
    }
    let mut out = TensorElement::zero(x.algebra.clone(), x.legs + y.legs);
    for (ka, va) in x.coeffs.iter() {
        for (kb, vb) in y.coeffs.iter() {
            let mut key = Vec::with_capacity(ka.len() + kb.len());
            key.extend_from_slice(ka);
            key.extend_from_slice(kb);
            out.add_term(key, &va.mul(vb));
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn _assert_send_sync()
where
    FiniteDimHopf: Send + Sync,
    TensorElement: Send + Sync,
{
}
