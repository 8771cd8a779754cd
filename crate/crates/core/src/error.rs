use thiserror::Error;

/// Errors raised by the solvers, formats and generators of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// The instance is larger than the configured limit of an exhaustive procedure.
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("swap #{index} does not name two adjacent alternatives")]
    NonAdjacentSwap { index: usize },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn capacity(what: &'static str, actual: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Capacity {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
