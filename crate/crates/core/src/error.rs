use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument was outside the operation's domain.
    InvalidParameter(String),
    /// A configured search or size budget was exhausted before an answer
    /// was reached. This means "unknown", never "absent".
    ResourceLimit { what: &'static str, limit: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::ResourceLimit { what, limit } => {
                write!(f, "resource limit exceeded: {what} budget of {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
