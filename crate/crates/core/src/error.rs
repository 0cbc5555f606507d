use thiserror::Error;

/// Errors raised by the exact-arithmetic, combinatorial and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial upper index must be nonnegative, got {0}")]
    NegativeUpperIndex(i64),

    #[error("pole: {0} vanishes")]
    Pole(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no prefix difference reaches +/-{k}; the bi-word is a fixed point")]
    NoCrossing { k: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
