//! The group ℤ²(H) of lazy twists and quasi-coboundaries, and the check
//! that `G_n = {T_A, R_A}` multiplies like `ℤ₂ ⋉ (M_n(k), +)`.

use rand::Rng;

use crate::constructions::EnAlgebra;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::report::{ReportSet, VerificationReport, Witness};
use crate::rstructures::en::{en_rA, en_tA};
use crate::rstructures::qt::{ensure_equal, is_lazy_twist, is_quasi_coboundary};
use crate::tensor::TensorElement;

/// Which kind of family an element of ℤ²(H) induces: a laycle (lazy twist)
/// or a quasi-braiding (quasi-coboundary). The two kinds are disjoint by
/// type even when the underlying elements coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZsqKind {
    LazyTwist,
    QuasiCoboundary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZsqElement {
    pub kind: ZsqKind,
    pub element: TensorElement,
}

impl ZsqElement {
    /// Validates the element against its kind's axiom suite.
    pub fn new(kind: ZsqKind, element: TensorElement) -> Result<Self> {
        let h = element.algebra().clone();
        let report = match kind {
            ZsqKind::LazyTwist => is_lazy_twist(&h, &element),
            ZsqKind::QuasiCoboundary => is_quasi_coboundary(&h, &element),
        };
        if !report.passed {
            return Err(Error::Precondition(format!(
                "element is not in Z²(H): {report}"
            )));
        }
        Ok(ZsqElement { kind, element })
    }
}

/// Multiplication in ℤ²(H), following the categorical composition table:
/// laycle·laycle = `S·T`, laycle·quasibraiding = `T₂₁·R`, quasibraiding·laycle
/// = `R·T`, quasibraiding·quasibraiding = `R₂₁·P` (a laycle). The output is
/// re-validated against its kind's axioms.
pub fn zsq_mul(u: &ZsqElement, v: &ZsqElement) -> Result<ZsqElement> {
    use ZsqKind::*;
    let (kind, element) = match (u.kind, v.kind) {
        (LazyTwist, LazyTwist) => (LazyTwist, u.element.mul(&v.element)?),
        (LazyTwist, QuasiCoboundary) => {
            (QuasiCoboundary, u.element.swap21()?.mul(&v.element)?)
        }
        (QuasiCoboundary, LazyTwist) => (QuasiCoboundary, u.element.mul(&v.element)?),
        (QuasiCoboundary, QuasiCoboundary) => {
            (LazyTwist, u.element.swap21()?.mul(&v.element)?)
        }
    };
    ZsqElement::new(kind, element)
}

fn random_matrix(en: &EnAlgebra, rng: &mut impl Rng) -> DenseMatrix {
    let field = en.field();
    let mut m = DenseMatrix::zero(en.n, en.n, field);
    let span = match field.characteristic() {
        0 => 7,
        p => p as i64,
    };
    for r in 0..en.n {
        for c in 0..en.n {
            *m.at_mut(r, c) = field.from_i64(rng.random_range(0..span) - if field.characteristic() == 0 { 3 } else { 0 });
        }
    }
    m
}

fn gn_element(en: &EnAlgebra, laycle: bool, m: &DenseMatrix) -> Result<ZsqElement> {
    if laycle {
        ZsqElement::new(ZsqKind::LazyTwist, en_tA(en, m)?)
    } else {
        ZsqElement::new(ZsqKind::QuasiCoboundary, en_rA(en, m)?)
    }
}

/// Samples pairs from `G_n = {T_A, R_A}`, multiplies them with [`zsq_mul`]
/// and compares against the semidirect-product law
/// `(s,A)·(t,B) = (s+t, B + A·t)` where the nontrivial ℤ₂ action is
/// `A ↦ −Aᵗ`.
pub fn verify_gn_semidirect(
    en: &EnAlgebra,
    sample_count: usize,
    rng: &mut impl Rng,
) -> Result<VerificationReport> {
    if en.n > 3 {
        return Err(Error::Precondition("G_n check supported for n ≤ 3".into()));
    }
    let mut set = ReportSet::new();
    for s in 0..sample_count {
        let u_laycle = rng.random_bool(0.5);
        let v_laycle = rng.random_bool(0.5);
        let a = random_matrix(en, rng);
        let b = random_matrix(en, rng);
        let u = gn_element(en, u_laycle, &a)?;
        let v = gn_element(en, v_laycle, &b)?;
        let product = zsq_mul(&u, &v)?;

        let expected_laycle = u_laycle == v_laycle;
        let acted = if v_laycle {
            a.clone()
        } else {
            // passing a quasibraiding conjugates the matrix part
            let mut neg = a.transpose();
            for r in 0..en.n {
                for c in 0..en.n {
                    let v = neg.at(r, c).neg();
                    *neg.at_mut(r, c) = v;
                }
            }
            neg
        };
        let expected_matrix = b.add(&acted)?;
        let expected = gn_element(en, expected_laycle, &expected_matrix)?;
        if product.kind != expected.kind {
            set.push(VerificationReport::fail(
                format!("gn-sample-{s}"),
                Witness::new("kind", format!("{:?}", product.kind), format!("{:?}", expected.kind)),
            ));
            break;
        }
        let rep = ensure_equal(&format!("gn-sample-{s}"), &product.element, &expected.element);
        let failed = !rep.passed;
        set.push(rep);
        if failed {
            break;
        }
    }
    Ok(set.merged("gn-semidirect"))
}
