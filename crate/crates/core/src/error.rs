use crate::scalar::Overflow;

#[derive(Debug, thiserror::Error)]
pub enum PiError {
    #[error("integer overflow in fixed-width scalar")]
    Overflow,
    #[error("{0} is neither 0 nor a prime power")]
    NotPrimePower(String),
    #[error("inner lattice is not contained in the outer lattice")]
    NotContained,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("malformed commutator word: {0}")]
    MalformedCommutator(String),
    #[error("invalid ring model: {0}")]
    InvalidRing(String),
    #[error("ring elements belong to different models")]
    ModelMismatch,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid partition pair: {0}")]
    InvalidPair(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource budget exceeded: {needed} substitutions requested, budget {budget}")]
    ResourceExceeded { budget: u64, needed: u64 },
    #[error("ring model has no unit")]
    NotUnital,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<Overflow> for PiError {
    fn from(_: Overflow) -> Self {
        PiError::Overflow
    }
}

pub type PiResult<T> = Result<T, PiError>;

/// Run `narrow` (a fixed-width instantiation) and repeat the computation with
/// `wide` (arbitrary precision) if the narrow run overflowed.
pub fn exact<R>(narrow: impl FnOnce() -> PiResult<R>, wide: impl FnOnce() -> PiResult<R>) -> PiResult<R> {
    match narrow() {
        Err(PiError::Overflow) => wide(),
        other => other,
    }
}
