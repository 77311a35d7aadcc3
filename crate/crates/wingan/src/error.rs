//! Error types shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Tensor shape mismatch; carries both shapes in the message.
    #[error("shape error: {0}")]
    Shape(String),

    /// Invalid architecture or run configuration.
    #[error("config error: {0}")]
    Config(String),

    /// An operation was called outside its contract.
    #[error("contract error: {0}")]
    Contract(String),

    /// A verification oracle could not run (e.g. non-deterministic closure).
    #[error("oracle error: {0}")]
    Oracle(String),

    /// Non-finite value surfaced during a forward pass or training step.
    #[error("numeric fault in {term} at iteration {iter}")]
    Fault { term: String, iter: u64 },

    /// Checkpoint file failed length or checksum validation.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// Checkpoint format version not understood.
    #[error("version error: expected format v{expected}, found v{found}")]
    Version { expected: u32, found: u32 },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
