use thiserror::Error;

/// Errors reported by the coding library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} is not an element of a field with {q} elements")]
    NotAnElement { value: u64, q: u32 },
    #[error("duplicate interpolation node")]
    DuplicateNode,
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("power series undefined: denominator has zero constant term")]
    SeriesUndefined,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("expected {expected} symbols, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("infeasible decoding parameters: {0}")]
    Infeasible(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("fundamental iterative algorithm exhausted all columns")]
    ColumnsExhausted,
    #[error("decoding failed: {0}")]
    DecodeFailure(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
