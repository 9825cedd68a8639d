use thiserror::Error;

/// Errors shared by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Two words (or a word and a code) do not live over the same alphabet
    /// or do not have the same length.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// An operation received a value outside of its domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A malformed code file or dual-solution file.
    #[error("parse error: {0}")]
    Parse(String),
    /// A search exceeded its node or time budget.
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
