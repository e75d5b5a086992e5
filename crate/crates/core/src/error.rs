use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates the operation's documented domain.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A matrix, form or certificate is malformed.
    #[error("structural error: {0}")]
    Structural(String),
    /// A geometric precondition (curve on X, smooth along the curve) fails.
    #[error("{0}")]
    Precondition(String),
    /// A computation did not close within its search window.
    #[error("internal error: {0}")]
    Internal(String),
    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
