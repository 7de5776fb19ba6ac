use alloc::string::String;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("non-finite coordinate at position {0}")]
    NonFinite(usize),
    #[error("point {index} has dimension {found}, dataset has dimension {expected}")]
    RaggedData {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("size limit exceeded: n={n}, d={d} (exact combinatorial depth needs d <= {max_d} and n <= {max_n})")]
    SizeLimit {
        n: usize,
        d: usize,
        max_d: usize,
        max_n: usize,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    #[error("argument outside domain: {0}")]
    Domain(&'static str),
    #[error("insufficient data: need at least {needed} points, found {found}")]
    InsufficientData { needed: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("unknown distribution `{0}`")]
    UnknownDistribution(String),
    #[error("invalid model: {0}")]
    Model(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
