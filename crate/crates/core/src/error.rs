//! Crate-wide error type.

/// Errors reported by the geometry and arithmetic routines.
///
/// Validation failures (bad weights, incompatible domains, out-of-range
/// indices) are ordinary errors; violations of internal invariants that the
/// construction is supposed to guarantee panic instead, so that a bug can
/// never masquerade as a clean result.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
