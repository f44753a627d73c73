use thiserror::Error;

use crate::confighom::Statement;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid sparse matrix: {0}")]
    InvalidMatrix(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("boundary composite is nonzero: d[{lower}] * d[{degree}] != 0 (offending degree {degree})")]
    BoundarySquareNonzero { degree: usize, lower: usize },

    #[error("denominator must have constant term 1, found {0}")]
    BadDenominator(i64),

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid mapping-space parameters: {0}")]
    InvalidMapSpace(String),

    #[error("invalid configuration-space parameters: {0}")]
    InvalidConfigSpace(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("partition of a {n}-element set exceeds the order-complex size bound of {max} elements")]
    SizeBound { n: usize, max: usize },

    #[error("no known result covers {case}; nearest statement checked: {nearest}")]
    Uncovered { case: String, nearest: Statement },

    #[error(
        "page depth {p_min} cannot certify the series up to degree {truncation} \
         (cells with p < {p_min} may reach total degree {first_missing})"
    )]
    InsufficientDepth {
        p_min: i64,
        truncation: usize,
        first_missing: i64,
    },

    #[error("d^M pair at q = {q} drives the coefficient of t^{degree} negative")]
    NegativeCoefficient { q: u64, degree: usize },
}
