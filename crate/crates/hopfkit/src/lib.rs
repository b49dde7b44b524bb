//! Exact-arithmetic verification engine for finite-dimensional Hopf algebras.
//!
//! The crate constructs concrete algebras — group algebras k[G], the pointed
//! Hopf algebras E(n), Drinfeld doubles D(k[G]) — and mechanically checks
//! algebraic identities on them: quasitriangularity and its variants, lazy
//! twists and cocycles, Yetter–Drinfeld braidings and pseudosymmetry,
//! pseudotwistors and twisted algebra products. Every check is an exact
//! identity over the rationals or a prime field; failures come with explicit
//! witnesses.

pub mod constructions;
pub mod error;
pub mod field;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod linops;
pub mod report;
pub mod rstructures;
pub mod tensor;
pub mod twistedalg;
pub mod ydmod;

pub mod cli;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use hopf::{FiniteDimHopf, HopfData, HopfRef};
pub use report::{VerificationReport, Witness};
pub use tensor::TensorElement;
