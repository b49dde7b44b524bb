//! Finite-dimensional Hopf algebras as structure-constant data.
//!
//! A [`FiniteDimHopf`] stores the multiplication table, unit, comultiplication,
//! counit and antipode (plus its inverse) of a Hopf algebra over an exact
//! field. Construction runs the full axiom suite; an object that fails the
//! gate is never handed out, so downstream verifiers can rely on the axioms.
//!
//! The antipode is obtained by a linear solve from the bialgebra data rather
//! than from a closed form; the axiom suite certifies the result.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{invert_matrix, solve_linear, DenseMatrix, SparseVec};
use crate::report::{ReportSet, VerificationReport, Witness};
use crate::tensor::TensorElement;

/// Sparse element of `H ⊗ H`, keyed by basis index pairs.
pub type Tensor2 = BTreeMap<(u32, u32), Scalar>;

type Tensor3 = BTreeMap<(u32, u32, u32), Scalar>;

/// Shared handle to an immutable Hopf algebra.
pub type HopfRef = Arc<FiniteDimHopf>;

/// Bialgebra (plus optional antipode) structure constants, pre-gate.
#[derive(Debug, Clone)]
pub struct HopfData {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// `mul[i][j]` is the expansion of `b_i * b_j`.
    pub mul: Vec<Vec<SparseVec>>,
    pub unit: SparseVec,
    /// `comul[i]` is the expansion of `Δ(b_i)`.
    pub comul: Vec<Tensor2>,
    pub counit: Vec<Scalar>,
    /// Matrix of the antipode (column `j` = expansion of `S(b_j)`), if known.
    pub antipode: Option<DenseMatrix>,
}

impl HopfData {
    fn check_shape(&self) -> Result<()> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        if self.basis_labels.len() != n
            || self.mul.len() != n
            || self.mul.iter().any(|row| row.len() != n)
            || self.comul.len() != n
            || self.counit.len() != n
            || self.unit.dim() != n
        {
            return Err(Error::DimensionMismatch(
                "structure constant tables disagree with dim".into(),
            ));
        }
        for row in &self.mul {
            for v in row {
                if v.dim() != n {
                    return Err(Error::DimensionMismatch("mul table entry dim".into()));
                }
            }
        }
        for t in &self.comul {
            for (&(i, j), _) in t.iter() {
                if i as usize >= n || j as usize >= n {
                    return Err(Error::IndexOutOfRange {
                        index: i.max(j) as usize,
                        dim: n,
                    });
                }
            }
        }
        if let Some(s) = &self.antipode {
            if s.rows() != n || s.cols() != n {
                return Err(Error::DimensionMismatch("antipode matrix shape".into()));
            }
        }
        Ok(())
    }

    /// Solves the left antipode law `μ(S⊗id)Δ(b_i) = ε(b_i)1` for the matrix
    /// of `S` and verifies the right-sided law on the solution. Returns
    /// `None` when no antipode exists.
    pub fn solve_antipode(&self) -> Result<Option<DenseMatrix>> {
        let n = self.dim;
        let field = self.field;
        // unknowns: S_{l,j} meaning S(b_j) = sum_l S_{l,j} b_l, var index j*n + l
        let nn = n * n;
        let mut m = DenseMatrix::zero(nn, nn, field);
        let mut rhs = SparseVec::zero(nn);
        for i in 0..n {
            for (&(j, k), d) in self.comul[i].iter() {
                for (l, _) in (0..n).map(|l| (l, ())) {
                    let prod = &self.mul[l][k as usize];
                    if prod.is_zero() {
                        continue;
                    }
                    for (r, c) in prod.iter() {
                        let row = i * n + r;
                        let var = (j as usize) * n + l;
                        let cur = m.at(row, var).add(&d.mul(c));
                        *m.at_mut(row, var) = cur;
                    }
                }
            }
            for (r, u) in self.unit.iter() {
                rhs.add_to(i * n + r, &self.counit[i].mul(u))?;
            }
        }
        let Some(solution) = solve_linear(m, &rhs)? else {
            return Ok(None);
        };
        let mut s = DenseMatrix::zero(n, n, field);
        for (var, v) in solution.iter() {
            let j = var / n;
            let l = var % n;
            *s.at_mut(l, j) = v.clone();
        }
        // right-sided law: μ(id⊗S)Δ(b_i) = ε(b_i)1
        for i in 0..n {
            let mut acc = SparseVec::zero(n);
            for (&(j, k), d) in self.comul[i].iter() {
                for l in 0..n {
                    let sk = s.at(l, k as usize);
                    if sk.is_zero() {
                        continue;
                    }
                    let coeff = d.mul(sk);
                    for (r, c) in self.mul[j as usize][l].iter() {
                        acc.add_to(r, &coeff.mul(c))?;
                    }
                }
            }
            let expected = self.unit.scale(&self.counit[i]);
            if acc != expected {
                return Ok(None);
            }
        }
        Ok(Some(s))
    }
}

/// A finite-dimensional Hopf algebra with bijective antipode, by structure
/// constants. Immutable once constructed.
#[derive(Debug)]
pub struct FiniteDimHopf {
    field: FieldSpec,
    dim: usize,
    basis_labels: Vec<String>,
    mul: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    comul: Vec<Tensor2>,
    counit: Vec<Scalar>,
    antipode: DenseMatrix,
    antipode_inv: DenseMatrix,
}

impl FiniteDimHopf {
    /// Builds the algebra and runs the full axiom gate; errors with the first
    /// failed axiom's witness if the data is not a Hopf algebra.
    pub fn new(data: HopfData) -> Result<HopfRef> {
        let h = Self::new_unchecked(data)?;
        let reports = h.verify_hopf_axioms();
        if let Some(fail) = reports.iter().find(|r| !r.passed) {
            return Err(Error::ConstructionGate(fail.to_string()));
        }
        Ok(h)
    }

    /// Builds without running the axiom gate (shape checks only). Intended
    /// for feeding deliberately broken tables to the verifier.
    pub fn new_unchecked(data: HopfData) -> Result<HopfRef> {
        data.check_shape()?;
        let antipode = match &data.antipode {
            Some(s) => s.clone(),
            None => data
                .solve_antipode()?
                .ok_or_else(|| Error::ConstructionGate("no antipode exists".into()))?,
        };
        let antipode_inv = invert_matrix(&antipode)?
            .ok_or_else(|| Error::ConstructionGate("antipode is not bijective".into()))?;
        Ok(Arc::new(FiniteDimHopf {
            field: data.field,
            dim: data.dim,
            basis_labels: data.basis_labels,
            mul: data.mul,
            unit: data.unit,
            comul: data.comul,
            counit: data.counit,
            antipode,
            antipode_inv,
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mul[i][j]
    }

    pub fn unit_vec(&self) -> &SparseVec {
        &self.unit
    }

    pub fn comul_basis(&self, i: usize) -> &Tensor2 {
        &self.comul[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn antipode_matrix(&self) -> &DenseMatrix {
        &self.antipode
    }

    pub fn antipode_inv_matrix(&self) -> &DenseMatrix {
        &self.antipode_inv
    }

    /// Bilinear product of two elements written in the basis.
    pub fn mul_vec(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero(self.dim);
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let coeff = x.mul(y);
                if coeff.is_zero() {
                    continue;
                }
                for (k, c) in self.mul[i][j].iter() {
                    out.add_to(k, &coeff.mul(c)).expect("dim");
                }
            }
        }
        out
    }

    /// Linear extension of Δ.
    pub fn comul_vec(&self, a: &SparseVec) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, x) in a.iter() {
            for (&key, c) in self.comul[i].iter() {
                add_t2(&mut out, key, &x.mul(c));
            }
        }
        out
    }

    /// Linear extension of ε.
    pub fn counit_vec(&self, a: &SparseVec) -> Scalar {
        let mut out = self.field.zero();
        for (i, x) in a.iter() {
            out = out.add(&x.mul(&self.counit[i]));
        }
        out
    }

    /// `S` (or `S⁻¹`) applied to an element.
    pub fn antipode_vec(&self, a: &SparseVec, inverse: bool) -> SparseVec {
        let m = if inverse { &self.antipode_inv } else { &self.antipode };
        m.apply(a).expect("dim")
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.mul[i][j] != self.mul[j][i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comul.iter().all(|t| {
            t.iter()
                .all(|(&(i, j), c)| t.get(&(j, i)).is_some_and(|d| d == c))
        })
    }

    fn label_pair(&self, i: u32, j: u32) -> String {
        format!(
            "{}⊗{}",
            self.basis_labels[i as usize], self.basis_labels[j as usize]
        )
    }

    fn fmt_vec(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".into();
        }
        v.iter()
            .map(|(i, c)| {
                if c.is_one() {
                    self.basis_labels[i].clone()
                } else {
                    format!("{}·{}", c, self.basis_labels[i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn fmt_t2(&self, t: &Tensor2) -> String {
        if t.is_empty() {
            return "0".into();
        }
        t.iter()
            .map(|(&(i, j), c)| {
                let lbl = self.label_pair(i, j);
                if c.is_one() {
                    lbl
                } else {
                    format!("{c}·({lbl})")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn fmt_t3(&self, t: &Tensor3) -> String {
        if t.is_empty() {
            return "0".into();
        }
        t.iter()
            .map(|(&(i, j, k), c)| {
                let lbl = format!(
                    "{}⊗{}⊗{}",
                    self.basis_labels[i as usize],
                    self.basis_labels[j as usize],
                    self.basis_labels[k as usize]
                );
                if c.is_one() {
                    lbl
                } else {
                    format!("{c}·({lbl})")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Runs the whole Hopf axiom suite, one report per axiom family, each
    /// carrying the lexicographically first failure.
    pub fn verify_hopf_axioms(&self) -> Vec<VerificationReport> {
        vec![
            VerificationReport::timed(|| self.check_associativity()),
            VerificationReport::timed(|| self.check_unit()),
            VerificationReport::timed(|| self.check_coassociativity()),
            VerificationReport::timed(|| self.check_counit_law()),
            VerificationReport::timed(|| self.check_bialgebra()),
            VerificationReport::timed(|| self.check_antipode_law()),
            VerificationReport::timed(|| self.check_antipode_inverse()),
        ]
    }

    /// Convenience wrapper: all axiom reports merged into one.
    pub fn axiom_report(&self) -> VerificationReport {
        let mut set = ReportSet::new();
        for r in self.verify_hopf_axioms() {
            set.push(r);
        }
        set.merged("hopf-axioms")
    }

    fn check_associativity(&self) -> VerificationReport {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.mul[i][j];
                for k in 0..self.dim {
                    let lhs = self.mul_vec(ij, &basis_vec(self.dim, k, self.field));
                    let rhs = self.mul_vec(
                        &basis_vec(self.dim, i, self.field),
                        &self.mul[j][k],
                    );
                    if lhs != rhs {
                        return VerificationReport::fail(
                            "associativity",
                            Witness::new(
                                format!(
                                    "{}⊗{}⊗{}",
                                    self.basis_labels[i], self.basis_labels[j], self.basis_labels[k]
                                ),
                                self.fmt_vec(&lhs),
                                self.fmt_vec(&rhs),
                            ),
                        );
                    }
                }
            }
        }
        VerificationReport::pass("associativity")
    }

    fn check_unit(&self) -> VerificationReport {
        for i in 0..self.dim {
            let b = basis_vec(self.dim, i, self.field);
            let left = self.mul_vec(&self.unit, &b);
            let right = self.mul_vec(&b, &self.unit);
            if left != b || right != b {
                let bad = if left != b { left } else { right };
                return VerificationReport::fail(
                    "unitality",
                    Witness::new(
                        self.basis_labels[i].clone(),
                        self.fmt_vec(&bad),
                        self.fmt_vec(&b),
                    ),
                );
            }
        }
        VerificationReport::pass("unitality")
    }

    fn check_coassociativity(&self) -> VerificationReport {
        for i in 0..self.dim {
            let mut lhs = Tensor3::new();
            let mut rhs = Tensor3::new();
            for (&(p, q), c) in self.comul[i].iter() {
                for (&(a, b), d) in self.comul[p as usize].iter() {
                    add_t3(&mut lhs, (a, b, q), &c.mul(d));
                }
                for (&(a, b), d) in self.comul[q as usize].iter() {
                    add_t3(&mut rhs, (p, a, b), &c.mul(d));
                }
            }
            if lhs != rhs {
                return VerificationReport::fail(
                    "coassociativity",
                    Witness::new(
                        self.basis_labels[i].clone(),
                        self.fmt_t3(&lhs),
                        self.fmt_t3(&rhs),
                    ),
                );
            }
        }
        VerificationReport::pass("coassociativity")
    }

    fn check_counit_law(&self) -> VerificationReport {
        for i in 0..self.dim {
            let mut left = SparseVec::zero(self.dim);
            let mut right = SparseVec::zero(self.dim);
            for (&(p, q), c) in self.comul[i].iter() {
                left.add_to(q as usize, &c.mul(&self.counit[p as usize]))
                    .expect("dim");
                right
                    .add_to(p as usize, &c.mul(&self.counit[q as usize]))
                    .expect("dim");
            }
            let b = basis_vec(self.dim, i, self.field);
            if left != b || right != b {
                let bad = if left != b { left } else { right };
                return VerificationReport::fail(
                    "counit-law",
                    Witness::new(
                        self.basis_labels[i].clone(),
                        self.fmt_vec(&bad),
                        self.fmt_vec(&b),
                    ),
                );
            }
        }
        VerificationReport::pass("counit-law")
    }

    fn check_bialgebra(&self) -> VerificationReport {
        // Δ and ε are algebra maps
        let unit_t2 = self.comul_vec(&self.unit);
        let mut expected = Tensor2::new();
        for (i, a) in self.unit.iter() {
            for (j, b) in self.unit.iter() {
                add_t2(&mut expected, (i as u32, j as u32), &a.mul(b));
            }
        }
        if unit_t2 != expected {
            return VerificationReport::fail(
                "bialgebra",
                Witness::new("Δ(1)", self.fmt_t2(&unit_t2), self.fmt_t2(&expected)),
            );
        }
        if !self.counit_vec(&self.unit).is_one() {
            return VerificationReport::fail(
                "bialgebra",
                Witness::new("ε(1)", self.counit_vec(&self.unit), "1"),
            );
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.comul_vec(&self.mul[i][j]);
                let rhs = t2_mul(self, &self.comul[i], &self.comul[j]);
                if lhs != rhs {
                    return VerificationReport::fail(
                        "bialgebra",
                        Witness::new(
                            format!("Δ({}·{})", self.basis_labels[i], self.basis_labels[j]),
                            self.fmt_t2(&lhs),
                            self.fmt_t2(&rhs),
                        ),
                    );
                }
                let el = self.counit_vec(&self.mul[i][j]);
                let er = self.counit[i].mul(&self.counit[j]);
                if el != er {
                    return VerificationReport::fail(
                        "bialgebra",
                        Witness::new(
                            format!("ε({}·{})", self.basis_labels[i], self.basis_labels[j]),
                            el,
                            er,
                        ),
                    );
                }
            }
        }
        VerificationReport::pass("bialgebra")
    }

    fn check_antipode_law(&self) -> VerificationReport {
        for i in 0..self.dim {
            let mut left = SparseVec::zero(self.dim);
            let mut right = SparseVec::zero(self.dim);
            for (&(p, q), c) in self.comul[i].iter() {
                let sp = self.antipode_vec(&basis_vec(self.dim, p as usize, self.field), false);
                for (l, sl) in sp.iter() {
                    for (r, m) in self.mul[l][q as usize].iter() {
                        left.add_to(r, &c.mul(sl).mul(m)).expect("dim");
                    }
                }
                let sq = self.antipode_vec(&basis_vec(self.dim, q as usize, self.field), false);
                for (l, sl) in sq.iter() {
                    for (r, m) in self.mul[p as usize][l].iter() {
                        right.add_to(r, &c.mul(sl).mul(m)).expect("dim");
                    }
                }
            }
            let expected = self.unit.scale(&self.counit[i]);
            if left != expected || right != expected {
                let bad = if left != expected { left } else { right };
                return VerificationReport::fail(
                    "antipode-law",
                    Witness::new(
                        self.basis_labels[i].clone(),
                        self.fmt_vec(&bad),
                        self.fmt_vec(&expected),
                    ),
                );
            }
        }
        VerificationReport::pass("antipode-law")
    }

    fn check_antipode_inverse(&self) -> VerificationReport {
        match self.antipode_inv.matmul(&self.antipode) {
            Ok(prod) if prod.is_identity() => VerificationReport::pass("antipode-inverse"),
            Ok(prod) => VerificationReport::fail(
                "antipode-inverse",
                Witness::new("S⁻¹·S", format!("{prod}"), "identity"),
            ),
            Err(e) => VerificationReport::fail(
                "antipode-inverse",
                Witness::new("S⁻¹·S", e.to_string(), "identity"),
            ),
        }
    }

    /// Identity element as a `k`-leg tensor.
    pub fn one_tensor(self: &HopfRef, legs: usize) -> TensorElement {
        TensorElement::one(self.clone(), legs)
    }

    /// Δ of a basis element as a 2-leg tensor element.
    pub fn comul_tensor(self: &HopfRef, i: usize) -> TensorElement {
        TensorElement::from_tensor2(self.clone(), &self.comul[i])
    }
}

/// The dual Hopf algebra on the dual basis: multiplication transposed from Δ,
/// comultiplication from μ, antipode transposed. Passes the axiom gate.
pub fn build_dual(h: &HopfRef) -> Result<HopfRef> {
    let n = h.dim();
    let field = h.field();
    let mut mul = vec![vec![SparseVec::zero(n); n]; n];
    for k in 0..n {
        for (&(i, j), c) in h.comul_basis(k).iter() {
            mul[i as usize][j as usize].add_to(k, c)?;
        }
    }
    let unit = SparseVec::from_entries(
        n,
        (0..n).map(|k| (k, h.counit_basis(k).clone())),
    )?;
    let mut comul = vec![Tensor2::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j).iter() {
                add_t2(&mut comul[k], (i as u32, j as u32), c);
            }
        }
    }
    let counit: Vec<Scalar> = (0..n)
        .map(|k| h.unit_vec().get(k).cloned().unwrap_or_else(|| field.zero()))
        .collect();
    let antipode = h.antipode_matrix().transpose();
    let labels = (0..n)
        .map(|k| format!("{}^*", h.basis_label(k)))
        .collect();
    FiniteDimHopf::new(HopfData {
        field,
        dim: n,
        basis_labels: labels,
        mul,
        unit,
        comul,
        counit,
        antipode: Some(antipode),
    })
}

pub(crate) fn basis_vec(dim: usize, i: usize, field: FieldSpec) -> SparseVec {
    SparseVec::basis(dim, i, field).expect("basis index in range")
}

pub(crate) fn add_t2(t: &mut Tensor2, key: (u32, u32), v: &Scalar) {
    let cur = match t.remove(&key) {
        Some(old) => old.add(v),
        None => v.clone(),
    };
    if !cur.is_zero() {
        t.insert(key, cur);
    }
}

fn add_t3(t: &mut Tensor3, key: (u32, u32, u32), v: &Scalar) {
    let cur = match t.remove(&key) {
        Some(old) => old.add(v),
        None => v.clone(),
    };
    if !cur.is_zero() {
        t.insert(key, cur);
    }
}

/// Componentwise product in `H ⊗ H` on raw 2-tensors.
pub(crate) fn t2_mul(h: &FiniteDimHopf, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&(a, b), c) in x.iter() {
        for (&(p, q), d) in y.iter() {
            let coeff = c.mul(d);
            if coeff.is_zero() {
                continue;
            }
            for (r, e) in h.mul[a as usize][p as usize].iter() {
                for (s, f) in h.mul[b as usize][q as usize].iter() {
                    add_t2(&mut out, (r as u32, s as u32), &coeff.mul(e).mul(f));
                }
            }
        }
    }
    out
}
