//! Quasitriangular / triangular / pseudotriangular / almost-triangular
//! checks, lazy twists, neatness, quasi-coboundaries and the twist
//! compatibility corollary.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hopf::HopfRef;
use crate::report::{ReportSet, VerificationReport, Witness};
use crate::tensor::{outer, TensorElement};

/// Exact comparison with the lexicographically first differing coefficient
/// as witness.
pub fn ensure_equal(name: &str, lhs: &TensorElement, rhs: &TensorElement) -> VerificationReport {
    if lhs == rhs {
        return VerificationReport::pass(name);
    }
    let keys: BTreeSet<Vec<u32>> = lhs
        .terms()
        .map(|(k, _)| k.to_vec())
        .chain(rhs.terms().map(|(k, _)| k.to_vec()))
        .collect();
    for k in keys {
        let a = lhs.coeff(&k);
        let b = rhs.coeff(&k);
        if a != b {
            return VerificationReport::fail(name, Witness::new(lhs.fmt_key(&k), a, b));
        }
    }
    VerificationReport::fail(name, Witness::new("?", lhs, rhs))
}

fn check_invertible(name: &str, x: &TensorElement) -> (VerificationReport, Option<TensorElement>) {
    match x.invert() {
        Ok(Some(inv)) => (VerificationReport::pass(name), Some(inv)),
        Ok(None) => (
            VerificationReport::fail(name, Witness::new("invertibility", x, "no inverse")),
            None,
        ),
        Err(e) => (
            VerificationReport::fail(name, Witness::new("invertibility", e.to_string(), "")),
            None,
        ),
    }
}

fn comul_element(h: &HopfRef, i: usize) -> TensorElement {
    TensorElement::from_tensor2(h.clone(), h.comul_basis(i))
}

/// Δ-commutation: `Δᶜᵒᵖ(b)·x = x·Δ(b)` for every basis `b` (with `cop`
/// optionally disabled to check plain commutation with Δ).
fn intertwines_coproduct(
    name: &str,
    h: &HopfRef,
    x: &TensorElement,
    cop_on_left: bool,
) -> Result<VerificationReport> {
    for i in 0..h.dim() {
        let delta = comul_element(h, i);
        let left_factor = if cop_on_left { delta.swap21()? } else { delta.clone() };
        let lhs = left_factor.mul(x)?;
        let rhs = x.mul(&delta)?;
        if lhs != rhs {
            let mut rep = ensure_equal(name, &lhs, &rhs);
            if let Some(w) = rep.witness.as_mut() {
                w.location = format!("Δ({}): {}", h.basis_label(i), w.location);
            }
            return Ok(rep);
        }
    }
    Ok(VerificationReport::pass(name))
}

fn counit_conditions(name: &str, h: &HopfRef, x: &TensorElement) -> Result<VerificationReport> {
    let one = TensorElement::one(h.clone(), 1);
    let left = x.apply_counit_leg(1)?;
    if left != one {
        return Ok(ensure_equal(name, &left, &one).rename(name));
    }
    let right = x.apply_counit_leg(2)?;
    if right != one {
        return Ok(ensure_equal(name, &right, &one).rename(name));
    }
    Ok(VerificationReport::pass(name))
}

/// Drinfeld's four quasitriangularity axioms plus invertibility.
pub fn is_quasitriangular(h: &HopfRef, r: &TensorElement) -> VerificationReport {
    VerificationReport::timed(|| match qt_inner(h, r) {
        Ok(rep) => rep,
        Err(e) => VerificationReport::fail(
            "quasitriangular",
            Witness::new("error", e.to_string(), ""),
        ),
    })
}

fn qt_inner(h: &HopfRef, r: &TensorElement) -> Result<VerificationReport> {
    let mut set = ReportSet::new();
    let (inv_rep, _) = check_invertible("invertible", r);
    let ok = inv_rep.passed;
    set.push(inv_rep);
    if ok {
        let lhs = r.apply_coproduct_leg(1)?;
        let rhs = r.leg_embed(&[1, 3], 3)?.mul(&r.leg_embed(&[2, 3], 3)?)?;
        set.push(ensure_equal("(Δ⊗id)(R)=R13R23", &lhs, &rhs));

        let lhs = r.apply_coproduct_leg(2)?;
        let rhs = r.leg_embed(&[1, 3], 3)?.mul(&r.leg_embed(&[1, 2], 3)?)?;
        set.push(ensure_equal("(id⊗Δ)(R)=R13R12", &lhs, &rhs));

        set.push(counit_conditions("counit-conditions", h, r)?);
        set.push(intertwines_coproduct("Δcop(h)R=RΔ(h)", h, r, true)?);
    }
    Ok(set.merged("quasitriangular"))
}

/// `R₂₁R = 1⊗1`. Assumes `R` already passed the quasitriangularity check.
pub fn is_triangular(h: &HopfRef, r: &TensorElement) -> VerificationReport {
    VerificationReport::timed(|| match triangular_inner(h, r) {
        Ok(rep) => rep,
        Err(e) => {
            VerificationReport::fail("triangular", Witness::new("error", e.to_string(), ""))
        }
    })
}

fn triangular_inner(h: &HopfRef, r: &TensorElement) -> Result<VerificationReport> {
    let prod = r.swap21()?.mul(r)?;
    let one = TensorElement::one(h.clone(), 2);
    Ok(ensure_equal("R21R=1⊗1", &prod, &one).rename("triangular"))
}

/// The modified quantum Yang–Baxter equation
/// `R₁₂ R₃₁⁻¹ R₂₃ = R₂₃ R₃₁⁻¹ R₁₂`. The inverse is computed on two legs and
/// then embedded, since embedding is an algebra map.
pub fn is_pseudotriangular(h: &HopfRef, r: &TensorElement) -> VerificationReport {
    let _ = h;
    VerificationReport::timed(|| match pseudo_inner(r) {
        Ok(rep) => rep,
        Err(e) => VerificationReport::fail(
            "pseudotriangular",
            Witness::new("error", e.to_string(), ""),
        ),
    })
}

fn pseudo_inner(r: &TensorElement) -> Result<VerificationReport> {
    let Some(rinv) = r.invert()? else {
        return Ok(VerificationReport::fail(
            "pseudotriangular",
            Witness::new("invertibility", r, "no inverse"),
        ));
    };
    let r12 = r.leg_embed(&[1, 2], 3)?;
    let r23 = r.leg_embed(&[2, 3], 3)?;
    let r31inv = rinv.leg_embed(&[3, 1], 3)?;
    let lhs = r12.mul(&r31inv)?.mul(&r23)?;
    let rhs = r23.mul(&r31inv)?.mul(&r12)?;
    Ok(ensure_equal("R12·R31⁻¹·R23=R23·R31⁻¹·R12", &lhs, &rhs).rename("pseudotriangular"))
}

/// `R₂₁R` central in `H⊗H`.
pub fn is_almost_triangular(h: &HopfRef, r: &TensorElement) -> VerificationReport {
    let _ = h;
    VerificationReport::timed(|| match r.swap21().and_then(|r21| r21.mul(r)) {
        Ok(f) => f.is_central().rename("almost-triangular"),
        Err(e) => VerificationReport::fail(
            "almost-triangular",
            Witness::new("error", e.to_string(), ""),
        ),
    })
}

/// Lazy twist axioms: invertibility, counit normalization, the twist
/// equation, commutation with every Δ(h), plus the stated consequence
/// `(1⊗T)(id⊗Δ)(T) = (T⊗1)(Δ⊗id)(T)`.
pub fn is_lazy_twist(h: &HopfRef, f: &TensorElement) -> VerificationReport {
    VerificationReport::timed(|| match lazy_twist_inner(h, f, true) {
        Ok(rep) => rep,
        Err(e) => {
            VerificationReport::fail("lazy-twist", Witness::new("error", e.to_string(), ""))
        }
    })
}

/// Same as [`is_lazy_twist`] with the invertibility requirement dropped
/// (the k[C₂] element `T₀` satisfies everything else).
pub fn is_lazy_twist_except_invertibility(h: &HopfRef, f: &TensorElement) -> VerificationReport {
    VerificationReport::timed(|| match lazy_twist_inner(h, f, false) {
        Ok(rep) => rep,
        Err(e) => {
            VerificationReport::fail("lazy-twist", Witness::new("error", e.to_string(), ""))
        }
    })
}

fn lazy_twist_inner(
    h: &HopfRef,
    f: &TensorElement,
    require_invertible: bool,
) -> Result<VerificationReport> {
    let mut set = ReportSet::new();
    if require_invertible {
        let (rep, _) = check_invertible("invertible", f);
        set.push(rep);
    }
    set.push(counit_conditions("counit-conditions", h, f)?);
    // (id⊗Δ)(T)(1⊗T) = (Δ⊗id)(T)(T⊗1)
    let lhs = f.apply_coproduct_leg(2)?.mul(&f.leg_embed(&[2, 3], 3)?)?;
    let rhs = f.apply_coproduct_leg(1)?.mul(&f.leg_embed(&[1, 2], 3)?)?;
    set.push(ensure_equal("twist-equation", &lhs, &rhs));
    set.push(intertwines_coproduct("Δ(h)T=TΔ(h)", h, f, false)?);
    // consequence of the axioms
    let lhs = f.leg_embed(&[2, 3], 3)?.mul(&f.apply_coproduct_leg(2)?)?;
    let rhs = f.leg_embed(&[1, 2], 3)?.mul(&f.apply_coproduct_leg(1)?)?;
    set.push(ensure_equal("twist-equation-consequence", &lhs, &rhs));
    Ok(set.merged("lazy-twist"))
}

/// `F₁₂F₂₃ = F₂₃F₁₂`.
pub fn is_neat(h: &HopfRef, f: &TensorElement) -> VerificationReport {
    let _ = h;
    VerificationReport::timed(|| match neat_inner(f) {
        Ok(rep) => rep,
        Err(e) => VerificationReport::fail("neat", Witness::new("error", e.to_string(), "")),
    })
}

fn neat_inner(f: &TensorElement) -> Result<VerificationReport> {
    let f12 = f.leg_embed(&[1, 2], 3)?;
    let f23 = f.leg_embed(&[2, 3], 3)?;
    Ok(ensure_equal("F12F23=F23F12", &f12.mul(&f23)?, &f23.mul(&f12)?).rename("neat"))
}

/// Quasi-coboundary axioms: invertibility, `R₁₂(Δ⊗id)(R) = R₂₃(id⊗Δ)(R)`,
/// counit normalization, Δ-intertwining.
pub fn is_quasi_coboundary(h: &HopfRef, r: &TensorElement) -> VerificationReport {
    VerificationReport::timed(|| match quasi_cob_inner(h, r) {
        Ok(rep) => rep,
        Err(e) => VerificationReport::fail(
            "quasi-coboundary",
            Witness::new("error", e.to_string(), ""),
        ),
    })
}

fn quasi_cob_inner(h: &HopfRef, r: &TensorElement) -> Result<VerificationReport> {
    let mut set = ReportSet::new();
    let (rep, _) = check_invertible("invertible", r);
    let ok = rep.passed;
    set.push(rep);
    if ok {
        let lhs = r.leg_embed(&[1, 2], 3)?.mul(&r.apply_coproduct_leg(1)?)?;
        let rhs = r.leg_embed(&[2, 3], 3)?.mul(&r.apply_coproduct_leg(2)?)?;
        set.push(ensure_equal("R12(Δ⊗id)(R)=R23(id⊗Δ)(R)", &lhs, &rhs));
        set.push(counit_conditions("counit-conditions", h, r)?);
        set.push(intertwines_coproduct("Δcop(h)R=RΔ(h)", h, r, true)?);
    }
    Ok(set.merged("quasi-coboundary"))
}

/// Coboundary = quasi-coboundary + `R₂₁R = 1⊗1`.
pub fn is_coboundary(h: &HopfRef, r: &TensorElement) -> VerificationReport {
    VerificationReport::timed(|| {
        let mut set = ReportSet::new();
        set.push(is_quasi_coboundary(h, r));
        set.push(is_triangular(h, r).rename("R21R=1⊗1"));
        set.merged("coboundary")
    })
}

/// Which side carries the inverses in `D¹(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoboundarySide {
    /// `Δ(z)·(z⁻¹⊗z⁻¹)`
    InverseRight,
    /// `(z⁻¹⊗z⁻¹)·Δ(z)`
    InverseLeft,
}

/// Builds the coboundary twist of an invertible normalized element and
/// reports whether the result is a lazy twist.
pub fn coboundary_twist(
    z: &TensorElement,
    side: CoboundarySide,
) -> Result<(TensorElement, VerificationReport)> {
    if z.legs() != 1 {
        return Err(Error::Precondition("coboundary twist needs a 1-leg element".into()));
    }
    let h = z.algebra().clone();
    let eps = z.apply_counit_leg(1)?;
    if eps.coeff(&[]) != h.field().one() {
        return Err(Error::Precondition("ε(z) must be 1".into()));
    }
    let zinv = z.invert()?.ok_or(Error::NotInvertible)?;
    let dz = z.apply_coproduct_leg(1)?;
    let pair = outer(&zinv, &zinv)?;
    let twist = match side {
        CoboundarySide::InverseRight => dz.mul(&pair)?,
        CoboundarySide::InverseLeft => pair.mul(&dz)?,
    };
    let report = is_lazy_twist(&h, &twist);
    Ok((twist, report))
}

/// Hopf-level shadow of the D-structure condition on the regular
/// representation: `(Δ(z)⊗1)(1⊗Δ(z)) = (1⊗Δ(z))(Δ(z)⊗1)` in `H^{⊗3}`.
pub fn is_d_element(h: &HopfRef, z: &TensorElement) -> VerificationReport {
    let _ = h;
    VerificationReport::timed(|| match d_element_inner(z) {
        Ok(rep) => rep,
        Err(e) => {
            VerificationReport::fail("d-element", Witness::new("error", e.to_string(), ""))
        }
    })
}

fn d_element_inner(z: &TensorElement) -> Result<VerificationReport> {
    let dz = z.apply_coproduct_leg(1)?;
    let a = dz.leg_embed(&[1, 2], 3)?;
    let b = dz.leg_embed(&[2, 3], 3)?;
    Ok(ensure_equal("(Δz⊗1)(1⊗Δz)=(1⊗Δz)(Δz⊗1)", &a.mul(&b)?, &b.mul(&a)?)
        .rename("d-element"))
}

/// Compatibility equations between a quasitriangular `R` and a lazy twist
/// `F`: `(Δ⊗id)(F) = F₂₃R₁₂⁻¹F₁₃R₁₂` and `(id⊗Δ)(F) = F₁₂R₂₃⁻¹F₁₃R₂₃`.
pub fn check_twist_compat(
    h: &HopfRef,
    r: &TensorElement,
    f: &TensorElement,
) -> VerificationReport {
    let _ = h;
    VerificationReport::timed(|| match compat_inner(r, f) {
        Ok(rep) => rep,
        Err(e) => VerificationReport::fail(
            "twist-compatibility",
            Witness::new("error", e.to_string(), ""),
        ),
    })
}

fn compat_inner(r: &TensorElement, f: &TensorElement) -> Result<VerificationReport> {
    let Some(rinv) = r.invert()? else {
        return Ok(VerificationReport::fail(
            "twist-compatibility",
            Witness::new("invertibility", r, "no inverse"),
        ));
    };
    let mut set = ReportSet::new();
    let lhs = f.apply_coproduct_leg(1)?;
    let rhs = f
        .leg_embed(&[2, 3], 3)?
        .mul(&rinv.leg_embed(&[1, 2], 3)?)?
        .mul(&f.leg_embed(&[1, 3], 3)?)?
        .mul(&r.leg_embed(&[1, 2], 3)?)?;
    set.push(ensure_equal("(Δ⊗id)(F)=F23R12⁻¹F13R12", &lhs, &rhs));
    let lhs = f.apply_coproduct_leg(2)?;
    let rhs = f
        .leg_embed(&[1, 2], 3)?
        .mul(&rinv.leg_embed(&[2, 3], 3)?)?
        .mul(&f.leg_embed(&[1, 3], 3)?)?
        .mul(&r.leg_embed(&[2, 3], 3)?)?;
    set.push(ensure_equal("(id⊗Δ)(F)=F12R23⁻¹F13R23", &lhs, &rhs));
    Ok(set.merged("twist-compatibility"))
}

/// When the compatibility equations hold, returns `R' = RF` and
/// `R'' = F₂₁R`, asserting quasitriangularity of both (a failure there
/// contradicts the corollary and is raised as a cross-check error).
pub fn qt_from_twist(
    h: &HopfRef,
    r: &TensorElement,
    f: &TensorElement,
) -> Result<(VerificationReport, Option<(TensorElement, TensorElement)>)> {
    let compat = check_twist_compat(h, r, f);
    if !compat.passed {
        return Ok((compat, None));
    }
    let r1 = r.mul(f)?;
    let r2 = f.swap21()?.mul(r)?;
    for (name, cand) in [("R'=RF", &r1), ("R''=F21R", &r2)] {
        let rep = is_quasitriangular(h, cand);
        if !rep.passed {
            return Err(Error::CrossCheck(format!(
                "{name} failed quasitriangularity after compatible twist: {rep}"
            )));
        }
    }
    Ok((compat, Some((r1, r2))))
}
