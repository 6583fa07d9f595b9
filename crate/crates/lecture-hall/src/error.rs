use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Everything in this crate computes with checked 64-bit integers: an
/// overflow is reported as [`Error::Overflow`] instead of wrapping, since a
/// silently wrong certificate is worse than no certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("enumeration budget exceeded: requires {required} > budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("invalid parameter sequence: {0}")]
    InvalidSequence(String),

    /// A command or operation that is only defined for weakly increasing
    /// sequences with 0,1 first-order differences was called with some
    /// other sequence.
    #[error("sequence gate violated: {0}")]
    Gate(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Something the construction guarantees failed anyway. Seeing this
    /// means either an implementation bug or a falsified invariant.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
