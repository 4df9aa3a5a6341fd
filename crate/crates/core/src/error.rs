//! Error types shared across the crate.

use thiserror::Error;

/// Top-level error, grouping failures by pipeline stage so callers can map
/// them to distinct diagnostics (and exit codes).
#[derive(Debug, Error)]
pub enum Error {
    /// Case file could not be read or parsed.
    #[error("case parse error: {0}")]
    Parse(String),
    /// Case parsed but violates a structural invariant.
    #[error("case validation error: {0}")]
    Validation(String),
    /// Power flow or device back-solve failed.
    #[error("initialization error: {0}")]
    Init(String),
    /// Time-domain integration failed.
    #[error("solver error: {0}")]
    Solver(String),
    /// Linearization or eigenanalysis failed.
    #[error("small-signal error: {0}")]
    SmallSignal(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
    pub fn init(msg: impl Into<String>) -> Self {
        Error::Init(msg.into())
    }
    pub fn solver(msg: impl Into<String>) -> Self {
        Error::Solver(msg.into())
    }
    pub fn small_signal(msg: impl Into<String>) -> Self {
        Error::SmallSignal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
