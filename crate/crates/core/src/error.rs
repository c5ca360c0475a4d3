use thiserror::Error;

/// Errors raised by the algebra engine and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller supplied inconsistent arguments (dimension or registry mismatch, unassigned family).
    #[error("usage error: {0}")]
    Usage(String),

    /// Malformed polynomial expression or system file.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// The quotient ring R[x]/(f) is not a finite-dimensional vector space.
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),

    /// An operation's stated precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A homotopy witness was requested for a difference that is not a cocycle.
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
