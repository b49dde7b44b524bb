//! Bilinear 2-cocycles on H, lazy cocycles, `D¹` of functionals, convolution
//! inverses and the cocycle-twisted algebra.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfRef;
use crate::linalg::{solve_linear, DenseMatrix, SparseVec};
use crate::report::{VerificationReport, Witness};

/// A bilinear form `σ: H⊗H → k` by its value grid on basis pairs.
#[derive(Debug, Clone)]
pub struct BilinearForm {
    hopf: HopfRef,
    values: Vec<Vec<Scalar>>,
}

impl PartialEq for BilinearForm {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl BilinearForm {
    pub fn new(hopf: HopfRef, values: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = hopf.dim();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("bilinear form grid".into()));
        }
        Ok(BilinearForm { hopf, values })
    }

    /// `σ = ε⊗ε`, the trivial cocycle.
    pub fn trivial(hopf: HopfRef) -> Self {
        let n = hopf.dim();
        let values = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| hopf.counit_basis(i).mul(hopf.counit_basis(j)))
                    .collect()
            })
            .collect();
        BilinearForm { hopf, values }
    }

    pub fn hopf(&self) -> &HopfRef {
        &self.hopf
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i][j]
    }

    /// Bilinear extension to arbitrary elements.
    pub fn eval(&self, a: &SparseVec, b: &SparseVec) -> Scalar {
        let mut out = self.hopf.field().zero();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out = out.add(&x.mul(y).mul(&self.values[i][j]));
            }
        }
        out
    }

    pub fn is_normalized(&self) -> bool {
        let h = &self.hopf;
        let n = h.dim();
        let unit = h.unit_vec();
        (0..n).all(|i| {
            let b = crate::hopf::basis_vec(n, i, h.field());
            self.eval(unit, &b) == *h.counit_basis(i) && self.eval(&b, unit) == *h.counit_basis(i)
        })
    }

    /// Left 2-cocycle condition `σ(a₁,b₁)σ(a₂b₂,c) = σ(b₁,c₁)σ(a,b₂c₂)` on
    /// all basis triples.
    pub fn is_left_2cocycle(&self) -> VerificationReport {
        VerificationReport::timed(|| self.cocycle_check(true))
    }

    /// Right 2-cocycle condition `σ(a₁b₁,c)σ(a₂,b₂) = σ(a,b₁c₁)σ(b₂,c₂)`.
    pub fn is_right_2cocycle(&self) -> VerificationReport {
        VerificationReport::timed(|| self.cocycle_check(false))
    }

    fn cocycle_check(&self, left: bool) -> VerificationReport {
        let h = &self.hopf;
        let n = h.dim();
        let field = h.field();
        let name = if left { "left-2-cocycle" } else { "right-2-cocycle" };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (lhs, rhs) = if left {
                        let mut lhs = field.zero();
                        for (&(a1, a2), ca) in h.comul_basis(a).iter() {
                            for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                                let prod = h.mul_basis(a2 as usize, b2 as usize);
                                let s2 = self.eval(prod, &crate::hopf::basis_vec(n, c, field));
                                lhs = lhs.add(
                                    &ca.mul(cb).mul(&self.values[a1 as usize][b1 as usize]).mul(&s2),
                                );
                            }
                        }
                        let mut rhs = field.zero();
                        for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                            for (&(c1, c2), cc) in h.comul_basis(c).iter() {
                                let prod = h.mul_basis(b2 as usize, c2 as usize);
                                let s2 = self.eval(&crate::hopf::basis_vec(n, a, field), prod);
                                rhs = rhs.add(
                                    &cb.mul(cc).mul(&self.values[b1 as usize][c1 as usize]).mul(&s2),
                                );
                            }
                        }
                        (lhs, rhs)
                    } else {
                        let mut lhs = field.zero();
                        for (&(a1, a2), ca) in h.comul_basis(a).iter() {
                            for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                                let prod = h.mul_basis(a1 as usize, b1 as usize);
                                let s1 = self.eval(prod, &crate::hopf::basis_vec(n, c, field));
                                lhs = lhs.add(
                                    &ca.mul(cb).mul(&s1).mul(&self.values[a2 as usize][b2 as usize]),
                                );
                            }
                        }
                        let mut rhs = field.zero();
                        for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                            for (&(c1, c2), cc) in h.comul_basis(c).iter() {
                                let prod = h.mul_basis(b1 as usize, c1 as usize);
                                let s1 = self.eval(&crate::hopf::basis_vec(n, a, field), prod);
                                rhs = rhs.add(
                                    &cb.mul(cc).mul(&s1).mul(&self.values[b2 as usize][c2 as usize]),
                                );
                            }
                        }
                        (lhs, rhs)
                    };
                    if lhs != rhs {
                        return VerificationReport::fail(
                            name,
                            Witness::new(
                                format!(
                                    "{}⊗{}⊗{}",
                                    h.basis_label(a),
                                    h.basis_label(b),
                                    h.basis_label(c)
                                ),
                                lhs,
                                rhs,
                            ),
                        );
                    }
                }
            }
        }
        VerificationReport::pass(name)
    }

    /// Lazy condition `σ(h₁,h'₁)h₂h'₂ = h₁h'₁σ(h₂,h'₂)` on all basis pairs.
    pub fn is_lazy_cocycle(&self) -> VerificationReport {
        VerificationReport::timed(|| {
            let h = &self.hopf;
            let n = h.dim();
            for a in 0..n {
                for b in 0..n {
                    let mut lhs = SparseVec::zero(n);
                    let mut rhs = SparseVec::zero(n);
                    for (&(a1, a2), ca) in h.comul_basis(a).iter() {
                        for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                            let coeff = ca.mul(cb);
                            let s = self.values[a1 as usize][b1 as usize].mul(&coeff);
                            if !s.is_zero() {
                                for (k, m) in h.mul_basis(a2 as usize, b2 as usize).iter() {
                                    lhs.add_to(k, &s.mul(m)).expect("dim");
                                }
                            }
                            let s = self.values[a2 as usize][b2 as usize].mul(&coeff);
                            if !s.is_zero() {
                                for (k, m) in h.mul_basis(a1 as usize, b1 as usize).iter() {
                                    rhs.add_to(k, &s.mul(m)).expect("dim");
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return VerificationReport::fail(
                            "lazy-cocycle",
                            Witness::new(
                                format!("{}⊗{}", h.basis_label(a), h.basis_label(b)),
                                format!("{lhs:?}"),
                                format!("{rhs:?}"),
                            ),
                        );
                    }
                }
            }
            VerificationReport::pass("lazy-cocycle")
        })
    }

    /// Convolution inverse `σ⁻¹` with `σ(a₁,b₁)σ⁻¹(a₂,b₂) = ε(a)ε(b)`,
    /// verified two-sided; `None` when not convolution invertible.
    pub fn convolution_inverse(&self) -> Result<Option<BilinearForm>> {
        let h = &self.hopf;
        let n = h.dim();
        let field = h.field();
        let nn = n * n;
        let mut m = DenseMatrix::zero(nn, nn, field);
        let mut rhs = SparseVec::zero(nn);
        for a in 0..n {
            for b in 0..n {
                let row = a * n + b;
                for (&(a1, a2), ca) in h.comul_basis(a).iter() {
                    for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                        let coeff =
                            ca.mul(cb).mul(&self.values[a1 as usize][b1 as usize]);
                        if coeff.is_zero() {
                            continue;
                        }
                        let var = (a2 as usize) * n + b2 as usize;
                        let cur = m.at(row, var).add(&coeff);
                        *m.at_mut(row, var) = cur;
                    }
                }
                rhs.add_to(row, &h.counit_basis(a).mul(h.counit_basis(b)))?;
            }
        }
        let Some(sol) = solve_linear(m, &rhs)? else {
            return Ok(None);
        };
        let mut values = vec![vec![field.zero(); n]; n];
        for (var, v) in sol.iter() {
            values[var / n][var % n] = v.clone();
        }
        let inv = BilinearForm {
            hopf: h.clone(),
            values,
        };
        // verify the other side: σ⁻¹(a₁,b₁)σ(a₂,b₂) = ε(a)ε(b)
        for a in 0..n {
            for b in 0..n {
                let mut acc = field.zero();
                for (&(a1, a2), ca) in h.comul_basis(a).iter() {
                    for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                        acc = acc.add(
                            &ca.mul(cb)
                                .mul(&inv.values[a1 as usize][b1 as usize])
                                .mul(&self.values[a2 as usize][b2 as usize]),
                        );
                    }
                }
                if acc != h.counit_basis(a).mul(h.counit_basis(b)) {
                    return Ok(None);
                }
            }
        }
        Ok(Some(inv))
    }
}

/// A linear functional `γ: H → k`.
#[derive(Debug, Clone)]
pub struct Functional {
    hopf: HopfRef,
    values: Vec<Scalar>,
}

impl Functional {
    pub fn new(hopf: HopfRef, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != hopf.dim() {
            return Err(Error::DimensionMismatch("functional values".into()));
        }
        Ok(Functional { hopf, values })
    }

    pub fn value(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    pub fn eval(&self, a: &SparseVec) -> Scalar {
        let mut out = self.hopf.field().zero();
        for (i, x) in a.iter() {
            out = out.add(&x.mul(&self.values[i]));
        }
        out
    }

    pub fn is_normalized(&self) -> bool {
        self.eval(self.hopf.unit_vec()).is_one()
    }

    /// `γ(h₁)h₂ = h₁γ(h₂)` on every basis element.
    pub fn is_lazy(&self) -> bool {
        let h = &self.hopf;
        let n = h.dim();
        (0..n).all(|i| {
            let mut lhs = SparseVec::zero(n);
            let mut rhs = SparseVec::zero(n);
            for (&(p, q), c) in h.comul_basis(i).iter() {
                lhs.add_to(q as usize, &c.mul(&self.values[p as usize]))
                    .expect("dim");
                rhs.add_to(p as usize, &c.mul(&self.values[q as usize]))
                    .expect("dim");
            }
            lhs == rhs
        })
    }

    /// Convolution inverse, verified two-sided.
    pub fn convolution_inverse(&self) -> Result<Option<Functional>> {
        let h = &self.hopf;
        let n = h.dim();
        let field = h.field();
        let mut m = DenseMatrix::zero(n, n, field);
        let mut rhs = SparseVec::zero(n);
        for i in 0..n {
            for (&(p, q), c) in h.comul_basis(i).iter() {
                let coeff = c.mul(&self.values[p as usize]);
                let cur = m.at(i, q as usize).add(&coeff);
                *m.at_mut(i, q as usize) = cur;
            }
            rhs.add_to(i, h.counit_basis(i))?;
        }
        let Some(sol) = solve_linear(m, &rhs)? else {
            return Ok(None);
        };
        let values: Vec<Scalar> = (0..n)
            .map(|i| sol.get(i).cloned().unwrap_or_else(|| field.zero()))
            .collect();
        let inv = Functional {
            hopf: h.clone(),
            values,
        };
        for i in 0..n {
            let mut acc = field.zero();
            for (&(p, q), c) in h.comul_basis(i).iter() {
                acc = acc.add(&c.mul(&inv.values[p as usize]).mul(&self.values[q as usize]));
            }
            if acc != *h.counit_basis(i) {
                return Ok(None);
            }
        }
        Ok(Some(inv))
    }

    /// `D¹(γ)(h,h') = γ(h₁)γ(h'₁)γ⁻¹(h₂h'₂)`; requires γ normalized and
    /// convolution invertible.
    pub fn d1(&self) -> Result<BilinearForm> {
        if !self.is_normalized() {
            return Err(Error::Precondition("D¹ needs a normalized functional".into()));
        }
        let inv = self
            .convolution_inverse()?
            .ok_or(Error::NotInvertible)?;
        let h = &self.hopf;
        let n = h.dim();
        let field = h.field();
        let mut values = vec![vec![field.zero(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let mut acc = field.zero();
                for (&(a1, a2), ca) in h.comul_basis(a).iter() {
                    for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                        let prod = h.mul_basis(a2 as usize, b2 as usize);
                        acc = acc.add(
                            &ca.mul(cb)
                                .mul(&self.values[a1 as usize])
                                .mul(&self.values[b1 as usize])
                                .mul(&inv.eval(prod)),
                        );
                    }
                }
                values[a][b] = acc;
            }
        }
        BilinearForm::new(h.clone(), values)
    }
}

/// Which side of the multiplication the cocycle twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistSide {
    Left,
    Right,
}

/// Builds the σ-twisted multiplication table
/// (`h ·σ h' = σ(h₁,h'₁)h₂h'₂` or the right-handed variant) together with an
/// exhaustive associativity report. The associativity verdict must match the
/// matching cocycle check — that equivalence is itself a tested property.
pub fn twisted_algebra_cocycle(
    h: &HopfRef,
    sigma: &BilinearForm,
    side: TwistSide,
) -> Result<(Vec<Vec<SparseVec>>, VerificationReport)> {
    if !sigma.is_normalized() {
        return Err(Error::Precondition("twist needs a normalized σ".into()));
    }
    let n = h.dim();
    let field = h.field();
    let mut table = vec![vec![SparseVec::zero(n); n]; n];
    for a in 0..n {
        for b in 0..n {
            for (&(a1, a2), ca) in h.comul_basis(a).iter() {
                for (&(b1, b2), cb) in h.comul_basis(b).iter() {
                    let coeff = ca.mul(cb);
                    match side {
                        TwistSide::Left => {
                            let s = sigma.value(a1 as usize, b1 as usize).mul(&coeff);
                            if s.is_zero() {
                                continue;
                            }
                            for (k, m) in h.mul_basis(a2 as usize, b2 as usize).iter() {
                                table[a][b].add_to(k, &s.mul(m))?;
                            }
                        }
                        TwistSide::Right => {
                            let s = sigma.value(a2 as usize, b2 as usize).mul(&coeff);
                            if s.is_zero() {
                                continue;
                            }
                            for (k, m) in h.mul_basis(a1 as usize, b1 as usize).iter() {
                                table[a][b].add_to(k, &s.mul(m))?;
                            }
                        }
                    }
                }
            }
        }
    }
    let report = VerificationReport::timed(|| {
        let mul_vec = |x: &SparseVec, y: &SparseVec| -> SparseVec {
            let mut out = SparseVec::zero(n);
            for (i, a) in x.iter() {
                for (j, b) in y.iter() {
                    let c = a.mul(b);
                    for (k, m) in table[i][j].iter() {
                        out.add_to(k, &c.mul(m)).expect("dim");
                    }
                }
            }
            out
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let bc = crate::hopf::basis_vec(n, c, field);
                    let lhs = mul_vec(&table[a][b], &bc);
                    let ab = crate::hopf::basis_vec(n, a, field);
                    let rhs = mul_vec(&ab, &table[b][c]);
                    if lhs != rhs {
                        return VerificationReport::fail(
                            "twisted-associativity",
                            Witness::new(
                                format!(
                                    "{}⊗{}⊗{}",
                                    h.basis_label(a),
                                    h.basis_label(b),
                                    h.basis_label(c)
                                ),
                                format!("{lhs:?}"),
                                format!("{rhs:?}"),
                            ),
                        );
                    }
                }
            }
        }
        VerificationReport::pass("twisted-associativity")
    });
    Ok((table, report))
}
