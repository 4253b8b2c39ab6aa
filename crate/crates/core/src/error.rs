use thiserror::Error;

/// Errors raised by the engine. Falsification verdicts are not errors; they
/// are reported through result statuses.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("size limit exceeded: {0}")]
    Size(String),
    #[error("structural error: {0}")]
    Structure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("computation failed: {0}")]
    Computation(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }
    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
    pub fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
    pub fn computation(msg: impl Into<String>) -> Self {
        Error::Computation(msg.into())
    }
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
