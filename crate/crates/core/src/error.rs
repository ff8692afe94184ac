use thiserror::Error;

/// Errors raised by the rational substrate and the solvers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("reciprocal of zero")]
    ZeroReciprocal,

    #[error("expected a nonnegative value, got {0}")]
    Negative(String),

    #[error("malformed rational {0:?}")]
    Malformed(String),

    #[error("empty interval: {low} is not below {high}")]
    EmptyInterval { low: String, high: String },

    #[error("interval ({low}, {high}) violates the precondition: {reason}")]
    Precondition {
        low: String,
        high: String,
        reason: &'static str,
    },

    /// The iteration did not terminate within its safety cap. This signals a
    /// bug, never bad input.
    #[error("internal error: iteration cap of {cap} steps exceeded")]
    IterationCap { cap: usize },

    #[error("internal error: {0}")]
    Internal(&'static str),

    #[error("no fraction found within the search cap of {cap}")]
    SearchCap { cap: u64 },

    #[error("maximum denominator must be at least 2, got {0}")]
    MaxDenominator(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
