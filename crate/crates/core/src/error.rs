//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exact randomized decision could not be separated within the
    /// configured number of refinement bits.
    #[error("refinement cap of {cap_bits} bits exhausted")]
    RefinementExhausted { cap_bits: u32 },

    #[error("cannot invert a series with zero constant term")]
    NonUnitInversion,

    #[error("index {index} exceeds truncation degree {degree}")]
    TruncationExceeded { index: usize, degree: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("partition size {size} exceeds configured limit {limit}")]
    SizeLimitExceeded { size: u64, limit: u64 },

    #[error("enumeration of {candidates} candidates exceeds budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("sample exceeded the size guard of {guard}")]
    GuardExceeded { guard: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polynomial is reducible")]
    ReduciblePolynomial,

    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,

    #[error("wrong field: {0}")]
    WrongField(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix is singular")]
    SingularInput,

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("invalid column index {0}")]
    InvalidColumn(u64),

    #[error("partition size {actual} does not match required size {expected}")]
    SizeMismatch { actual: u64, expected: u64 },

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("corrupt cache file: {0}")]
    CorruptCache(String),

    #[error("cached table does not match request: {0}")]
    CacheMismatch(String),
}
