use thiserror::Error;

/// Errors produced by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A function representation violates the monotonicity/consistency rules.
    #[error("invalid function: {0}")]
    InvalidFunction(String),
    /// An interval with incompatible endpoints was requested.
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    /// An operation precondition does not hold (wrong ordering, empty input, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A value lies strictly outside the range of the function being inverted.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// Textual input (rational, interval literal) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
