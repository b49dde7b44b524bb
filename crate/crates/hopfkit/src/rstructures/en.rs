//! The E(n) families `T_{i,j}(a)`, `T_A`, `R_A` and their displayed
//! relations.
//!
//! `T_A` is computed along two independent routes — the commuting product of
//! the `T_{i,j}(a_{ij})` and the determinant expansion over index subsets —
//! and the construction aborts if they disagree.

use crate::constructions::{EnAlgebra, EnBasisIndex};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfRef;
use crate::linalg::DenseMatrix;
use crate::report::{ReportSet, VerificationReport, Witness};
use crate::rstructures::qt::ensure_equal;
use crate::tensor::TensorElement;

/// `T_{i,j}(a) = 1⊗1 + a·(x_i ⊗ c x_j)`, 1-based `i`, `j`.
pub fn en_tij(en: &EnAlgebra, i: usize, j: usize, a: &Scalar) -> Result<TensorElement> {
    if i == 0 || i > en.n || j == 0 || j > en.n {
        return Err(Error::Precondition(format!(
            "T_ij indices ({i},{j}) out of range for E({})",
            en.n
        )));
    }
    let one = TensorElement::one(en.hopf.clone(), 2);
    let term = TensorElement::basis(en.hopf.clone(), &[en.x(i) as u32, en.cx(j) as u32])?;
    one.add(&term.scale(a))
}

fn check_matrix(en: &EnAlgebra, a: &DenseMatrix) -> Result<()> {
    if a.rows() != en.n || a.cols() != en.n {
        return Err(Error::DimensionMismatch(format!(
            "E({}) family needs an {0}x{0} matrix, got {}x{}",
            en.n,
            a.rows(),
            a.cols()
        )));
    }
    if a.field() != en.field() {
        return Err(Error::FieldMismatch(
            en.field().to_string(),
            a.field().to_string(),
        ));
    }
    Ok(())
}

fn t_matrix_product_route(en: &EnAlgebra, a: &DenseMatrix) -> Result<TensorElement> {
    let mut t = TensorElement::one(en.hopf.clone(), 2);
    for i in 1..=en.n {
        for j in 1..=en.n {
            let entry = a.at(i - 1, j - 1);
            if entry.is_zero() {
                continue;
            }
            t = t.mul(&en_tij(en, i, j, entry)?)?;
        }
    }
    Ok(t)
}

/// Exact determinant by cofactor expansion (submatrices here are at most
/// 6×6).
fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let field = m[0][0].field();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = field.zero();
    for (col, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, s)| s.clone())
                    .collect()
            })
            .collect();
        let term = top.mul(&det(&minor));
        acc = if col % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

fn subsets_of_size(n: usize, s: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == s {
            out.push(mask);
        }
    }
    out
}

fn mask_indices(mask: u32) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn t_matrix_det_route(en: &EnAlgebra, a: &DenseMatrix) -> Result<TensorElement> {
    let field = en.field();
    let mut terms: Vec<(Vec<u32>, Scalar)> = Vec::new();
    // unit term
    for (k, c) in TensorElement::one(en.hopf.clone(), 2).terms() {
        terms.push((k.to_vec(), c.clone()));
    }
    for s in 1..=en.n {
        let sign_negative = (s * (s - 1) / 2) % 2 == 1;
        for &p_mask in &subsets_of_size(en.n, s) {
            let rows = mask_indices(p_mask);
            for &f_mask in &subsets_of_size(en.n, s) {
                let cols = mask_indices(f_mask);
                let sub: Vec<Vec<Scalar>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| a.at(r, c).clone()).collect())
                    .collect();
                let mut coeff = det(&sub);
                if coeff.is_zero() {
                    continue;
                }
                if sign_negative {
                    coeff = coeff.neg();
                }
                let left = EnBasisIndex { a: 0, mask: p_mask }.flat() as u32;
                let right = EnBasisIndex {
                    a: (s % 2) as u8,
                    mask: f_mask,
                }
                .flat() as u32;
                terms.push((vec![left, right], coeff));
            }
        }
    }
    let _ = field;
    TensorElement::from_terms(en.hopf.clone(), 2, terms)
}

/// `T_A`, computed by both the product formula and the determinant expansion;
/// a mismatch aborts with a cross-check error.
#[allow(non_snake_case)]
pub fn en_tA(en: &EnAlgebra, a: &DenseMatrix) -> Result<TensorElement> {
    check_matrix(en, a)?;
    let by_product = t_matrix_product_route(en, a)?;
    let by_det = t_matrix_det_route(en, a)?;
    if by_product != by_det {
        return Err(Error::CrossCheck(format!(
            "T_A routes disagree: product gave {by_product}, determinant gave {by_det}"
        )));
    }
    Ok(by_product)
}

/// The triangular element `R₀ = ½(1⊗1 + c⊗1 + 1⊗c − c⊗c)`.
pub fn en_r0(en: &EnAlgebra) -> Result<TensorElement> {
    let h = &en.hopf;
    let half = h
        .field()
        .from_i64(2)
        .inv()
        .expect("char ≠ 2");
    let c = en.c() as u32;
    TensorElement::from_terms(
        h.clone(),
        2,
        [
            (vec![0, 0], half.clone()),
            (vec![c, 0], half.clone()),
            (vec![0, c], half.clone()),
            (vec![c, c], half.neg()),
        ],
    )
}

/// `R_A = R₀ · T_A`.
#[allow(non_snake_case)]
pub fn en_rA(en: &EnAlgebra, a: &DenseMatrix) -> Result<TensorElement> {
    en_r0(en)?.mul(&en_tA(en, a)?)
}

/// The four displayed relations between the families plus the inverse
/// formula `R_A⁻¹ = (R_{Aᵗ})₂₁`.
pub fn check_en_relations(
    en: &EnAlgebra,
    a: &DenseMatrix,
    b: &DenseMatrix,
) -> Result<VerificationReport> {
    check_matrix(en, a)?;
    check_matrix(en, b)?;
    let ta = en_tA(en, a)?;
    let tb = en_tA(en, b)?;
    let ra = en_rA(en, a)?;
    let rb = en_rA(en, b)?;
    let at = a.transpose();
    let mut set = ReportSet::new();

    set.push(ensure_equal(
        "T_A·T_B=T_{A+B}",
        &ta.mul(&tb)?,
        &en_tA(en, &a.add(b)?)?,
    ));
    set.push(ensure_equal(
        "R_A·T_B=R_{A+B}",
        &ra.mul(&tb)?,
        &en_rA(en, &a.add(b)?)?,
    ));
    set.push(ensure_equal(
        "(T_A)21·R_B=R_{B−Aᵗ}",
        &ta.swap21()?.mul(&rb)?,
        &en_rA(en, &b.sub(&at)?)?,
    ));
    set.push(ensure_equal(
        "(R_A)21·R_B=T_{B−Aᵗ}",
        &ra.swap21()?.mul(&rb)?,
        &en_tA(en, &b.sub(&at)?)?,
    ));
    match ra.invert()? {
        Some(ra_inv) => {
            set.push(ensure_equal(
                "R_A⁻¹=(R_{Aᵗ})21",
                &ra_inv,
                &en_rA(en, &at)?.swap21()?,
            ));
        }
        None => set.push(VerificationReport::fail(
            "R_A⁻¹=(R_{Aᵗ})21",
            Witness::new("invertibility", &ra, "no inverse"),
        )),
    }
    Ok(set.merged("en-relations"))
}

/// The k[C₂] family element
/// `(3+a)/4·1⊗1 + (1−a)/4·(1⊗g) + (1−a)/4·(g⊗1) − (1−a)/4·(g⊗g)`
/// (the paper's shared formula for the lazy twists `T_a` and the
/// quasi-coboundaries `R_a`).
pub fn c2_family_element(h: &HopfRef, a: &Scalar) -> Result<TensorElement> {
    if h.dim() != 2 {
        return Err(Error::Precondition("k[C2] family needs a 2-dim algebra".into()));
    }
    let field = h.field();
    let quarter = field.from_i64(4).inv().expect("char ≠ 2");
    let three_plus = field.from_i64(3).add(a).mul(&quarter);
    let one_minus = field.one().sub(a).mul(&quarter);
    TensorElement::from_terms(
        h.clone(),
        2,
        [
            (vec![0, 0], three_plus),
            (vec![0, 1], one_minus.clone()),
            (vec![1, 0], one_minus.clone()),
            (vec![1, 1], one_minus.neg()),
        ],
    )
}
