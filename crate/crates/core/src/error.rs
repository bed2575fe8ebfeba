//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by simulator operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes do not match (register sizes, bit-string lengths,
    /// oracle domains, matrix dimensions).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A requested object would exceed the configured dense-dimension cap.
    #[error("resource limit: requested dimension {requested} exceeds cap {cap}")]
    Resource { requested: u128, cap: usize },

    /// A numerical invariant was violated (norm, Hermiticity, positivity,
    /// weight normalization).
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// An argument was outside its allowed range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Malformed bytes encountered while decoding a serialized artifact.
    #[error("decode error: {0}")]
    Decode(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
