//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("characteristic 2 is not supported (modulus {0})")]
    CharacteristicTwo(u32),
    #[error("modulus {0} out of range (need 2 < p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("invalid scalar literal `{0}` for {1}")]
    InvalidScalar(String, String),
    #[error("invalid field spec `{0}` (expected `q` or `gf:<p>`)")]
    InvalidFieldSpec(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("leg {leg} out of range for {legs}-leg element")]
    LegOutOfRange { leg: usize, legs: usize },
    #[error("duplicate leg position {0}")]
    DuplicateLeg(usize),
    #[error("tensor size {size} exceeds cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("search space {size} exceeds cap {cap}")]
    SearchCap { size: u128, cap: u128 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("invalid group spec `{0}`")]
    InvalidGroupSpec(String),
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("axiom check failed during construction: {0}")]
    ConstructionGate(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
