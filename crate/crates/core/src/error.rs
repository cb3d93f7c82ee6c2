use thiserror::Error;

/// Errors raised by construction and checking routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("capacity exceeded: {what} is {actual}, cap is {cap}")]
    Capacity {
        what: &'static str,
        actual: usize,
        cap: usize,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error(transparent)]
    Parse(#[from] crate::io::ParseError),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, actual: usize, cap: usize) -> Self {
        Error::Capacity { what, actual, cap }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
