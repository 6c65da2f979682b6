use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An operation would exceed one of the configured size caps.
    #[error("capacity exceeded: {what} has size {size}, cap is {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// Two independent computations of the same object disagreed.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn capacity(what: &'static str, size: usize, cap: usize) -> Self {
        Error::Capacity { what, size, cap }
    }
}
