use thiserror::Error;

/// Errors produced by the polynomial, root and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no roots")]
    ZeroPolynomial,

    #[error("polynomial has a zero constant term")]
    ZeroConstantTerm,

    #[error("root certification failed at the precision cap ({0} bits)")]
    PrecisionExhausted(u32),

    #[error("a root lies on the boundary circle")]
    BoundaryRoot,

    #[error("enumeration exceeded the node budget of {0}")]
    BudgetExceeded(u64),

    #[error("target is not a root: {0}")]
    NotARoot(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
