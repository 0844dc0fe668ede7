use thiserror::Error;

/// Errors reported by the library. All of them are input errors: the
/// operations themselves are total on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid beta-set {0:?}: elements must be distinct")]
    InvalidBetaSet(Vec<usize>),
    #[error("empty beta-set")]
    EmptyBetaSet,
    #[error("H({x},{y}) is not a hook of the beta-set: {reason}")]
    InvalidHook { x: usize, y: usize, reason: &'static str },
    #[error("{partition:?} is not a {r}-core")]
    NotACore { partition: Vec<usize>, r: usize },
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration of {size} group elements exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u64 },
    #[error("level mismatch: label has level {label}, element has level {element}")]
    LevelMismatch { label: usize, element: usize },
    #[error("internal fault: {0}")]
    Fault(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
