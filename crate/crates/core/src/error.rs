use thiserror::Error;

/// Errors raised by series, matrix and Riordan-group operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroLowOrder,
    #[error("series is not reversible (needs f(0) = 0 and f'(0) != 0)")]
    NotReversible,
    #[error("square root needs constant term 1")]
    BadConstantTerm,
    #[error("bivariate denominator vanishes at the origin")]
    ZeroConstant,
    #[error("invalid Riordan pair: {0}")]
    InvalidPair(&'static str),
    #[error("insufficient order: need {needed}, have {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not lower triangular (entry ({row}, {col}) is nonzero)")]
    NotLowerTriangular { row: usize, col: usize },
    #[error("entry ({row}, {col}) = {value} is not an integer")]
    NonIntegral { row: usize, col: usize, value: String },
    #[error("brute-force search limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
