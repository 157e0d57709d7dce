use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A caller broke an operation's contract (invalid argument,
    /// violated precondition).
    #[error("contract violation: {0}")]
    Contract(String),

    /// An enumeration guard was exceeded. The message names the guard
    /// and, where one exists, a cheaper alternative.
    #[error("guard exceeded: {0}")]
    Guard(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn guard(msg: impl Into<String>) -> Self {
        Error::Guard(msg.into())
    }
}
