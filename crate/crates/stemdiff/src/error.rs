//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by any stemdiff operation.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Array shapes do not line up.
    #[error("shape mismatch in {context}: expected {expected}, got {got}")]
    ShapeMismatch {
        context: String,
        expected: String,
        got: String,
    },

    /// File I/O failure, with the offending path.
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Audio decode/encode failure.
    #[error("audio error at {path}: {message}")]
    Audio { path: PathBuf, message: String },

    /// Configuration file or override problem.
    #[error("config error: {0}")]
    Config(String),

    /// Checkpoint directory missing, corrupt, or incompatible.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// A required training stage has not been run yet.
    #[error("missing prerequisite checkpoint for stage `{stage}`: run `stemdiff train --stage {stage}` first")]
    MissingStage { stage: String },

    /// Training diverged or produced non-finite values.
    #[error("training fault: {0}")]
    Training(String),

    /// Evaluation produced a non-finite metric.
    #[error("non-finite metric: {0}")]
    NonFiniteMetric(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn shape(context: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
