//! Hopf-level structure verifiers and families: quasitriangular /
//! triangular / pseudotriangular / almost-triangular structures, lazy twists
//! and neatness, quasi-coboundaries, lazy 2-cocycles, the E(n) families
//! `T_A` and `R_A`, the group ℤ²(H), lazy cohomology of k[C₂], and the
//! brute-force quasitriangular search.

mod cocycles;
mod cohomology;
mod en;
mod qt;
mod search;
mod zsq;

pub use cocycles::{
    twisted_algebra_cocycle, BilinearForm, Functional, TwistSide,
};
pub use cohomology::{lazy_cohomology_c2, C2LazyCohomology};
pub use en::{
    c2_family_element, check_en_relations, en_r0, en_rA, en_tij, en_tA,
};
pub use qt::{
    check_twist_compat, coboundary_twist, ensure_equal, is_almost_triangular, is_coboundary,
    is_d_element, is_lazy_twist, is_lazy_twist_except_invertibility, is_neat,
    is_pseudotriangular, is_quasi_coboundary, is_quasitriangular, is_triangular, qt_from_twist,
    CoboundarySide,
};
pub use search::search_qt;
pub use zsq::{verify_gn_semidirect, zsq_mul, ZsqElement, ZsqKind};
