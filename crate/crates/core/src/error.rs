use alloc::string::String;

use crate::arith::{PolyError, Rational};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: u32, dim: usize },
    #[error("bracket [x{0}, x{0}] must vanish")]
    DiagonalBracket(u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("basis change matrix is singular")]
    SingularBasisChange,
    #[error("Jacobi identity fails: {count} violation(s), first at (x{i}, x{j}, x{k}) with coefficient {residual} on x{t}")]
    InvalidAlgebra { count: usize, i: u32, j: u32, k: u32, t: u32, residual: Rational },
    #[error("symbolic rank {symbolic} disagrees with randomized rank {randomized}")]
    RankDisagreement { symbolic: usize, randomized: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("no regular functional found after {0} attempts")]
    AttemptsExhausted(usize),
    #[error("minor enumeration needs {count} minors, above the limit {limit}")]
    MinorGuard { count: u128, limit: u128 },
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("parameter `{name}` for `{entry}`: {reason}")]
    BadParameter { entry: String, name: String, reason: String },
    #[error("invalid deformation: {0}")]
    BadDeformation(String),
    #[error("invalid functional family: {0}")]
    BadFamily(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Poly(#[from] PolyError),
}
