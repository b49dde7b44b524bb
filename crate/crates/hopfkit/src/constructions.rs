//! Factories for the named algebras: group algebras k[G], the pointed Hopf
//! algebras E(n), Drinfeld doubles D(k[G]) of finite groups, and JSON file
//! ingestion for user-supplied structure constants.
//!
//! Every factory output passes the Hopf axiom gate before it is returned.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groups::FiniteGroup;
use crate::hopf::{add_t2, FiniteDimHopf, HopfData, HopfRef, Tensor2};
use crate::linalg::{solve_linear, DenseMatrix, SparseVec};
use crate::tensor::TensorElement;

/// Group algebra k[G]: basis = group elements, Δ(g) = g⊗g, ε(g) = 1.
/// The antipode comes out of the linear solve as S(g) = g⁻¹.
pub fn group_algebra(g: &FiniteGroup, field: FieldSpec) -> Result<HopfRef> {
    let n = g.order();
    let mut mul = vec![vec![SparseVec::zero(n); n]; n];
    for a in 0..n {
        for b in 0..n {
            mul[a][b] = SparseVec::basis(n, g.mul(a, b), field)?;
        }
    }
    let unit = SparseVec::basis(n, g.identity(), field)?;
    let comul = (0..n)
        .map(|a| {
            let mut t = Tensor2::new();
            t.insert((a as u32, a as u32), field.one());
            t
        })
        .collect();
    let counit = vec![field.one(); n];
    let labels = (0..n).map(|a| g.label(a).to_string()).collect();
    FiniteDimHopf::new(HopfData {
        field,
        dim: n,
        basis_labels: labels,
        mul,
        unit,
        comul,
        counit,
        antipode: None,
    })
}

/// Basis index of E(n): `c^a x_P` with `P ⊆ {1..n}` strictly increasing,
/// flattened as `a + 2·bitmask(P)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnBasisIndex {
    pub a: u8,
    pub mask: u32,
}

impl EnBasisIndex {
    pub fn flat(&self) -> usize {
        self.a as usize + 2 * self.mask as usize
    }

    pub fn from_flat(flat: usize) -> Self {
        EnBasisIndex {
            a: (flat & 1) as u8,
            mask: (flat >> 1) as u32,
        }
    }

    pub fn label(&self) -> String {
        let mut s = String::new();
        if self.a == 1 {
            s.push('c');
        }
        let mut m = self.mask;
        while m != 0 {
            let i = m.trailing_zeros() + 1;
            s.push_str(&format!("x{i}"));
            m &= m - 1;
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Parity of the permutation sorting the concatenation P‖Q (both sorted):
/// the number of pairs `p ∈ P`, `q ∈ Q` with `p > q`, mod 2.
fn shuffle_sign_is_negative(p_mask: u32, q_mask: u32) -> bool {
    let mut inversions = 0u32;
    let mut p = p_mask;
    while p != 0 {
        let i = p.trailing_zeros();
        // q-elements strictly below i
        inversions += (q_mask & ((1u32 << i) - 1)).count_ones();
        p &= p - 1;
    }
    inversions % 2 == 1
}

/// The 2^{n+1}-dimensional pointed Hopf algebra E(n): generators `c`,
/// `x_1..x_n` with `c² = 1`, `x_i² = 0`, `x_i c + c x_i = 0`,
/// `x_i x_j + x_j x_i = 0`; `Δ(c) = c⊗c`, `Δ(x_i) = 1⊗x_i + x_i⊗c`.
#[derive(Debug, Clone)]
pub struct EnAlgebra {
    pub hopf: HopfRef,
    pub n: usize,
}

pub fn build_en(n: usize, field: FieldSpec) -> Result<EnAlgebra> {
    if n > 6 {
        return Err(Error::Precondition(format!(
            "E(n) supported for n ≤ 6, got {n}"
        )));
    }
    let dim = 1usize << (n + 1);

    // multiplication in the normal form c^a x_P
    let mut mul = vec![vec![SparseVec::zero(dim); dim]; dim];
    for fa in 0..dim {
        let lhs = EnBasisIndex::from_flat(fa);
        for fb in 0..dim {
            let rhs = EnBasisIndex::from_flat(fb);
            if lhs.mask & rhs.mask != 0 {
                continue; // repeated x_i, product is zero
            }
            // moving x_P past c^b contributes (-1)^{b·|P|}
            let mut negative =
                rhs.a == 1 && lhs.mask.count_ones() % 2 == 1;
            if shuffle_sign_is_negative(lhs.mask, rhs.mask) {
                negative = !negative;
            }
            let out = EnBasisIndex {
                a: (lhs.a + rhs.a) % 2,
                mask: lhs.mask | rhs.mask,
            };
            let coeff = if negative {
                field.from_i64(-1)
            } else {
                field.one()
            };
            mul[fa][fb].set(out.flat(), coeff)?;
        }
    }
    let unit = SparseVec::basis(dim, 0, field)?;

    // Δ extended multiplicatively from Δ(c) = c⊗c, Δ(x_i) = 1⊗x_i + x_i⊗c,
    // computed with the freshly built multiplication table.
    let t2_product = |x: &Tensor2, y: &Tensor2| -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), c) in x.iter() {
            for (&(p, q), d) in y.iter() {
                let coeff = c.mul(d);
                let left = &mul[a as usize][p as usize];
                let right = &mul[b as usize][q as usize];
                for (r, e) in left.iter() {
                    for (s, f) in right.iter() {
                        add_t2(&mut out, (r as u32, s as u32), &coeff.mul(e).mul(f));
                    }
                }
            }
        }
        out
    };
    let c_flat = EnBasisIndex { a: 1, mask: 0 }.flat() as u32;
    let comul_c: Tensor2 = [((c_flat, c_flat), field.one())].into_iter().collect();
    let mut comul = Vec::with_capacity(dim);
    for flat in 0..dim {
        let idx = EnBasisIndex::from_flat(flat);
        let mut t: Tensor2 = [((0u32, 0u32), field.one())].into_iter().collect();
        if idx.a == 1 {
            t = t2_product(&t, &comul_c);
        }
        let mut m = idx.mask;
        while m != 0 {
            let bit = m.trailing_zeros();
            let xi = EnBasisIndex {
                a: 0,
                mask: 1 << bit,
            }
            .flat() as u32;
            let comul_xi: Tensor2 = [
                ((0u32, xi), field.one()),
                ((xi, c_flat), field.one()),
            ]
            .into_iter()
            .collect();
            t = t2_product(&t, &comul_xi);
            m &= m - 1;
        }
        comul.push(t);
    }

    let counit: Vec<Scalar> = (0..dim)
        .map(|flat| {
            if EnBasisIndex::from_flat(flat).mask == 0 {
                field.one()
            } else {
                field.zero()
            }
        })
        .collect();
    let labels = (0..dim)
        .map(|f| EnBasisIndex::from_flat(f).label())
        .collect();
    let hopf = FiniteDimHopf::new(HopfData {
        field,
        dim,
        basis_labels: labels,
        mul,
        unit,
        comul,
        counit,
        antipode: None,
    })?;
    Ok(EnAlgebra { hopf, n })
}

impl EnAlgebra {
    pub fn field(&self) -> FieldSpec {
        self.hopf.field()
    }

    /// Flat index of `x_i` (1-based `i`).
    pub fn x(&self, i: usize) -> usize {
        EnBasisIndex {
            a: 0,
            mask: 1 << (i - 1),
        }
        .flat()
    }

    /// Flat index of `c x_j` (1-based `j`).
    pub fn cx(&self, j: usize) -> usize {
        EnBasisIndex {
            a: 1,
            mask: 1 << (j - 1),
        }
        .flat()
    }

    /// Flat index of `c`.
    pub fn c(&self) -> usize {
        1
    }
}

/// A Drinfeld double D(k[G]) together with its canonical quasitriangular
/// element R = Σ (δ_h⊗g) ⊗ (δ_g⊗e).
#[derive(Debug, Clone)]
pub struct DrinfeldDouble {
    pub hopf: HopfRef,
    pub r_matrix: TensorElement,
    /// Which of the sidedness conventions validated (see `drinfeld_double_group`).
    pub convention: &'static str,
    pub group_order: usize,
}

/// Builds D(k[G]) on the basis `δ_g⊗h`. The paper-level description fixes the
/// carrier H*ᶜᵒᵖ⊗H and the element R but not the multiplication rule, so the
/// construction tries the four sidedness variants (conjugation side ×
/// coproduct pairing order) in a fixed order and returns the first that
/// passes both the Hopf gate and the quasitriangularity check.
pub fn drinfeld_double_group(g: &FiniteGroup, field: FieldSpec) -> Result<DrinfeldDouble> {
    let m = g.order();
    let dim = m * m;
    if dim > 64 {
        return Err(Error::SizeCap { size: dim, cap: 64 });
    }
    // Determined once by self-validation and frozen: conj-left/pair-ba is the
    // variant that passes both gates for every group tried (for abelian G the
    // pairing order is immaterial). The alternatives stay as fallbacks.
    let conventions: [(&'static str, bool, bool); 4] = [
        ("conj-left/pair-ba", true, false),
        ("conj-left/pair-ab", true, true),
        ("conj-right/pair-ba", false, false),
        ("conj-right/pair-ab", false, true),
    ];
    let mut last_failure = String::new();
    for (name, conj_left, pair_ab) in conventions {
        match try_double(g, field, conj_left, pair_ab) {
            Ok(hopf) => {
                let r = canonical_double_r(&hopf, g)?;
                let report = crate::rstructures::is_quasitriangular(&hopf, &r);
                if report.passed {
                    return Ok(DrinfeldDouble {
                        hopf,
                        r_matrix: r,
                        convention: name,
                        group_order: m,
                    });
                }
                last_failure = format!("{name}: {report}");
            }
            Err(e) => {
                last_failure = format!("{name}: {e}");
            }
        }
    }
    Err(Error::ConstructionGate(format!(
        "no Drinfeld double convention validated; last: {last_failure}"
    )))
}

fn try_double(
    g: &FiniteGroup,
    field: FieldSpec,
    conj_left: bool,
    pair_ab: bool,
) -> Result<HopfRef> {
    let m = g.order();
    let dim = m * m;
    let idx = |gg: usize, h: usize| gg * m + h;
    let e = g.identity();

    let mut mul = vec![vec![SparseVec::zero(dim); dim]; dim];
    for g1 in 0..m {
        for x in 0..m {
            for h1 in 0..m {
                for y in 0..m {
                    // (δ_g⊗x)(δ_h⊗y) = [g = x h x⁻¹] δ_g ⊗ xy  (or mirrored)
                    let conj = if conj_left {
                        g.mul(g.mul(x, h1), g.inverse(x))
                    } else {
                        g.mul(g.mul(g.inverse(x), h1), x)
                    };
                    if conj == g1 {
                        mul[idx(g1, x)][idx(h1, y)]
                            .set(idx(g1, g.mul(x, y)), field.one())?;
                    }
                }
            }
        }
    }
    let unit = SparseVec::from_entries(dim, (0..m).map(|gg| (idx(gg, e), field.one())))?;
    let mut comul = vec![Tensor2::new(); dim];
    for g1 in 0..m {
        for x in 0..m {
            for a in 0..m {
                for b in 0..m {
                    let prod = if pair_ab { g.mul(a, b) } else { g.mul(b, a) };
                    if prod == g1 {
                        add_t2(
                            &mut comul[idx(g1, x)],
                            (idx(a, x) as u32, idx(b, x) as u32),
                            &field.one(),
                        );
                    }
                }
            }
        }
    }
    let counit: Vec<Scalar> = (0..dim)
        .map(|f| if f / m == e { field.one() } else { field.zero() })
        .collect();
    let mut labels = Vec::with_capacity(dim);
    for g1 in 0..m {
        for x in 0..m {
            labels.push(format!("δ({}){}", g.label(g1), g.label(x)));
        }
    }
    FiniteDimHopf::new(HopfData {
        field,
        dim,
        basis_labels: labels,
        mul,
        unit,
        comul,
        counit,
        antipode: None,
    })
}

fn canonical_double_r(hopf: &HopfRef, g: &FiniteGroup) -> Result<TensorElement> {
    let m = g.order();
    let e = g.identity();
    let one = hopf.field().one();
    let idx = |gg: usize, h: usize| (gg * m + h) as u32;
    TensorElement::from_terms(
        hopf.clone(),
        2,
        (0..m).flat_map(|gg| {
            let one = one.clone();
            (0..m).map(move |h| (vec![idx(h, gg), idx(gg, e)], one.clone()))
        }),
    )
}

// ---------------------------------------------------------------------------
// Hopf files (JSON)
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct HopfFileJson {
    field: String,
    dim: usize,
    basis: Vec<String>,
    mul: Vec<Vec<Vec<(usize, String)>>>,
    comul: Vec<Vec<(usize, usize, String)>>,
    counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<Vec<String>>>,
}

/// Serializes a Hopf algebra to the JSON file schema (canonical scalar text
/// forms, no unit field — the unit is recovered by a linear solve on load).
pub fn hopf_to_json(h: &HopfRef) -> serde_json::Value {
    let n = h.dim();
    let file = HopfFileJson {
        field: h.field().to_string(),
        dim: n,
        basis: h.basis_labels().to_vec(),
        mul: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        h.mul_basis(i, j)
                            .iter()
                            .map(|(k, c)| (k, c.to_string()))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        comul: (0..n)
            .map(|i| {
                h.comul_basis(i)
                    .iter()
                    .map(|(&(p, q), c)| (p as usize, q as usize, c.to_string()))
                    .collect()
            })
            .collect(),
        counit: (0..n).map(|i| h.counit_basis(i).to_string()).collect(),
        antipode: Some(
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| h.antipode_matrix().at(r, c).to_string())
                        .collect()
                })
                .collect(),
        ),
    };
    serde_json::to_value(file).expect("serializable")
}

/// Parses and validates a Hopf algebra from the JSON schema. The unit is
/// solved from the multiplication table; a missing antipode triggers the
/// antipode solve; the axiom gate runs before the algebra is returned.
pub fn parse_hopf_str(s: &str) -> Result<HopfRef> {
    let file: HopfFileJson = serde_json::from_str(s)?;
    let field = FieldSpec::parse(&file.field)?;
    let n = file.dim;
    if file.basis.len() != n
        || file.mul.len() != n
        || file.mul.iter().any(|r| r.len() != n)
        || file.comul.len() != n
        || file.counit.len() != n
    {
        return Err(Error::DimensionMismatch(
            "hopf file tables disagree with dim".into(),
        ));
    }
    let mut mul = vec![vec![SparseVec::zero(n); n]; n];
    for (i, row) in file.mul.iter().enumerate() {
        for (j, entries) in row.iter().enumerate() {
            mul[i][j] = SparseVec::from_entries(
                n,
                entries
                    .iter()
                    .map(|(k, s)| Ok((*k, field.parse_scalar(s)?)))
                    .collect::<Result<Vec<_>>>()?,
            )?;
        }
    }
    let mut comul = vec![Tensor2::new(); n];
    for (i, entries) in file.comul.iter().enumerate() {
        for (p, q, s) in entries {
            if *p >= n || *q >= n {
                return Err(Error::IndexOutOfRange {
                    index: *p.max(q),
                    dim: n,
                });
            }
            add_t2(
                &mut comul[i],
                (*p as u32, *q as u32),
                &field.parse_scalar(s)?,
            );
        }
    }
    let counit = file
        .counit
        .iter()
        .map(|s| field.parse_scalar(s))
        .collect::<Result<Vec<_>>>()?;
    let antipode = match &file.antipode {
        None => None,
        Some(rows) => {
            let parsed = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| field.parse_scalar(s))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Some(DenseMatrix::from_rows(field, parsed)?)
        }
    };
    let unit = solve_unit(field, n, &mul)?;
    FiniteDimHopf::new(HopfData {
        field,
        dim: n,
        basis_labels: file.basis,
        mul,
        unit,
        comul,
        counit,
        antipode,
    })
}

pub fn parse_hopf_file(path: &Path) -> Result<HopfRef> {
    let s = std::fs::read_to_string(path)?;
    parse_hopf_str(&s)
}

/// Solves `u · b_j = b_j` for the unit coefficients.
fn solve_unit(field: FieldSpec, n: usize, mul: &[Vec<SparseVec>]) -> Result<SparseVec> {
    let mut m = DenseMatrix::zero(n * n, n, field);
    let mut rhs = SparseVec::zero(n * n);
    for j in 0..n {
        for i in 0..n {
            for (r, c) in mul[i][j].iter() {
                let cur = m.at(j * n + r, i).add(c);
                *m.at_mut(j * n + r, i) = cur;
            }
        }
        rhs.add_to(j * n + j, &field.one())?;
    }
    solve_linear(m, &rhs)?.ok_or_else(|| {
        Error::ConstructionGate("multiplication table has no unit".into())
    })
}

/// Structure constants compared entry-by-entry (used by round-trip tests).
pub fn same_structure_constants(a: &HopfRef, b: &HopfRef) -> bool {
    if a.dim() != b.dim() || a.field() != b.field() {
        return false;
    }
    let n = a.dim();
    for i in 0..n {
        if a.comul_basis(i) != b.comul_basis(i) || a.counit_basis(i) != b.counit_basis(i) {
            return false;
        }
        for j in 0..n {
            if a.mul_basis(i, j) != b.mul_basis(i, j) {
                return false;
            }
        }
    }
    a.unit_vec() == b.unit_vec() && a.antipode_matrix() == b.antipode_matrix()
}

/// Scan-based commutativity/cocommutativity summary used by tests.
pub fn structure_flags(h: &HopfRef) -> (bool, bool) {
    (h.is_commutative(), h.is_cocommutative())
}
