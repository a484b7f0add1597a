use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partite-set size at position {index} is {value}; sizes must be at least 1")]
    NonPositiveSize { index: usize, value: i64 },

    #[error("{what} exceeds budget: {actual} > {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("operation requires a non-empty partition")]
    EmptySpec,

    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("malformed embedding plan: {0}")]
    MalformedPlan(String),

    #[error("graph is intrinsically chiral; no achiral embedding plan exists")]
    ChiralInput,
}

pub type Result<T> = std::result::Result<T, Error>;
