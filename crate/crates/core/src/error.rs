use alloc::string::String;

/// Errors reported by the counting and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("expected a positive integer, got {0}")]
    NonPositive(i64),
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("rho must not equal 1")]
    RhoEqualsOne,
    #[error("series shape mismatch: {0}")]
    SeriesShape(String),
    #[error("exponent of total degree {degree} exceeds series cap {cap}")]
    BeyondCap { degree: u32, cap: u32 },
    #[error("part list must be nonempty with entries >= 1")]
    InvalidParts,
    #[error("argument must be nonnegative, got {0}")]
    NegativeArgument(i64),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("column {0} is all zero")]
    ZeroColumn(usize),
    #[error("matrix rank {rank} < rows {rows}; degenerate rows must be reduced before counting")]
    RankDeficient { rank: usize, rows: usize },
    #[error("exponent vector has total degree {found}, expected m - l = {expected}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("alpha lies on the zero set of P_m(alpha, D); use the limit mode")]
    AlphaOnZeroSet,
    #[error("perturbation direction keeps P_m identically zero along the line")]
    DegenerateDirection,
    #[error("limit along the perturbation direction diverges")]
    DivergentLimit,
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = core::result::Result<T, Error>;
