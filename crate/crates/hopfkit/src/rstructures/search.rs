//! Brute-force enumeration of all quasitriangular structures on a small
//! commutative Hopf algebra over GF(p).
//!
//! The counit conditions are linear in the coefficients of `R`, so they are
//! solved first; only the affine solution space is enumerated (e.g. k[C₃]
//! over GF(7) drops from 7⁹ to 7⁴ candidates). Enumeration order is
//! lexicographic in the free coefficients, so the output list is
//! deterministic.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfRef;
use crate::rstructures::qt::is_quasitriangular;
use crate::tensor::TensorElement;

const SEARCH_CAP: u128 = 10_000_000;

/// Reduced row echelon data: particular solution plus a basis of the
/// homogeneous solution space.
fn affine_solutions(
    field: FieldSpec,
    mut rows: Vec<Vec<Scalar>>,
    mut rhs: Vec<Scalar>,
) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0usize;
    for col in 0..ncols {
        let Some(pr) = (next_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pr, next_row);
        rhs.swap(pr, next_row);
        let inv = rows[next_row][col].inv().expect("pivot nonzero");
        for c in 0..ncols {
            rows[next_row][c] = rows[next_row][c].mul(&inv);
        }
        rhs[next_row] = rhs[next_row].mul(&inv);
        for r in 0..nrows {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in 0..ncols {
                let v = rows[r][c].sub(&f.mul(&rows[next_row][c]));
                rows[r][c] = v;
            }
            rhs[r] = rhs[r].sub(&f.mul(&rhs[next_row]));
        }
        pivots.push((next_row, col));
        next_row += 1;
    }
    for r in next_row..nrows {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut particular = vec![field.zero(); ncols];
    for &(r, c) in &pivots {
        particular[c] = rhs[r].clone();
    }
    let mut basis = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = vec![field.zero(); ncols];
        v[fc] = field.one();
        for &(r, c) in &pivots {
            v[c] = rows[r][fc].neg();
        }
        basis.push(v);
    }
    Some((particular, basis))
}

/// Enumerates every quasitriangular structure on `h`. Requires a commutative
/// algebra of dimension ≤ 4 over GF(p), p ≤ 13.
pub fn search_qt(h: &HopfRef) -> Result<Vec<TensorElement>> {
    let field = h.field();
    let p = match field {
        FieldSpec::PrimeField(p) if p <= 13 => p,
        FieldSpec::PrimeField(p) => {
            return Err(Error::Precondition(format!(
                "search-qt needs p ≤ 13, got {p}"
            )))
        }
        FieldSpec::Rationals => {
            return Err(Error::Precondition(
                "search-qt enumerates over GF(p), not the rationals".into(),
            ))
        }
    };
    if h.dim() > 4 {
        return Err(Error::Precondition(format!(
            "search-qt needs dim ≤ 4, got {}",
            h.dim()
        )));
    }
    if !h.is_commutative() {
        return Err(Error::Precondition(
            "search-qt requires a commutative Hopf algebra".into(),
        ));
    }
    let n = h.dim();
    let nn = n * n;

    // counit conditions: (ε⊗id)(R) = 1 and (id⊗ε)(R) = 1, linear in r_{ij}
    let mut rows = Vec::with_capacity(2 * n);
    let mut rhs = Vec::with_capacity(2 * n);
    for k in 0..n {
        let mut row = vec![field.zero(); nn];
        for i in 0..n {
            row[i * n + k] = h.counit_basis(i).clone();
        }
        rows.push(row);
        rhs.push(
            h.unit_vec()
                .get(k)
                .cloned()
                .unwrap_or_else(|| field.zero()),
        );
    }
    for k in 0..n {
        let mut row = vec![field.zero(); nn];
        for j in 0..n {
            row[k * n + j] = h.counit_basis(j).clone();
        }
        rows.push(row);
        rhs.push(
            h.unit_vec()
                .get(k)
                .cloned()
                .unwrap_or_else(|| field.zero()),
        );
    }
    let Some((particular, basis)) = affine_solutions(field, rows, rhs) else {
        return Ok(Vec::new());
    };

    let free = basis.len();
    let space = (p as u128).pow(free as u32);
    if space > SEARCH_CAP {
        return Err(Error::SearchCap {
            size: space,
            cap: SEARCH_CAP,
        });
    }

    let mut found = Vec::new();
    let mut counter = vec![0u32; free];
    loop {
        // candidate = particular + Σ counter_i · basis_i
        let mut coeffs = particular.clone();
        for (t, b) in counter.iter().zip(basis.iter()) {
            if *t == 0 {
                continue;
            }
            let tscale = field.from_i64(*t as i64);
            for (c, bv) in coeffs.iter_mut().zip(b.iter()) {
                *c = c.add(&bv.mul(&tscale));
            }
        }
        let r = TensorElement::from_terms(
            h.clone(),
            2,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(v, s)| (vec![(v / n) as u32, (v % n) as u32], s.clone())),
        )?;
        if is_quasitriangular(h, &r).passed {
            found.push(r);
        }
        // lexicographic counter increment (last digit fastest)
        let mut done = true;
        for slot in counter.iter_mut().rev() {
            *slot += 1;
            if *slot < p {
                done = false;
                break;
            }
            *slot = 0;
        }
        if done {
            break;
        }
    }
    Ok(found)
}
