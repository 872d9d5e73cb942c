use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported expansion region for 1/(1 - q^{alpha} z^{beta})")]
    UnsupportedRegion { alpha: i64, beta: i64 },

    #[error("series term q^{i} z^{j} lies outside the nonnegative quadrant")]
    NegativeSupport { i: i64, j: i64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
