//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Precondition violated by caller-supplied data.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Request exceeds a configured or hard size limit.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// The conic solver could not produce a usable solution.
    #[error("solver failure: {0}")]
    SolverFailure(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}
