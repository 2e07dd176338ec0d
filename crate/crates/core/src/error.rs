use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("indeterminate extended-integer operation: {0}")]
    Indeterminate(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("polynomial still contains symbolic parameters: {0}")]
    Symbolic(String),

    #[error("point is not on the curve: {0}")]
    NotOnCurve(String),

    #[error("unsupported point: {0}")]
    UnsupportedPoint(String),

    #[error("series precision exhausted after {0} terms")]
    Precision(usize),

    #[error("index {n} exceeds the configured limit {limit}")]
    IndexLimit { n: i64, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("indeterminate grid cell (i = {i}, j = {j}): {detail}")]
    IndeterminateCell { i: i64, j: i64, detail: String },

    #[error("outside the series domain: {0}")]
    Domain(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
