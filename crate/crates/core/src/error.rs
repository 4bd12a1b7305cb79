use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A requested size exceeds a configured cap.
    #[error("size limit exceeded: {what} is {value}, cap is {cap}")]
    Size {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    /// Malformed or inconsistent input.
    #[error("invalid input: {0}")]
    Input(String),

    /// The engine lacks the data or capability to answer.
    #[error("unsupported: {0}")]
    Capability(String),

    /// The question is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A safety cap on an iterative procedure was hit.
    #[error("iteration cap of {0} reached")]
    Cap(u64),

    /// Expression parsing failed at a 1-based column.
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    /// An atlas file could not be read or validated.
    #[error("atlas file: {0}")]
    Atlas(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
