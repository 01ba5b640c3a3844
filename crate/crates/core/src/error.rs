use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A model parameter or function argument is outside its domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A mathematically undefined request, e.g. a lower-branch root for c >= 1.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed text input (edge lists, assignments, experiment specs).
    #[error("parse error: {0}")]
    Parse(String),

    /// Iterative solver failed to reach the residual tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
