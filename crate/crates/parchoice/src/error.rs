//! Error kinds shared across the toolkit.
//!
//! Three failure classes cover everything callers need to distinguish:
//! malformed input data, missing or unusable resources, and task-level
//! misconfiguration (unknown class labels, too few classes, and the like).

use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input data that does not parse under a declared format.
    #[error("format error in {file} line {line}: {msg}")]
    Format {
        file: String,
        line: usize,
        msg: String,
    },

    /// A resource that cannot be read or is unusable as a whole.
    #[error("resource error: {0}")]
    Resource(String),

    /// A request that is inconsistent with the task or the trained model.
    #[error("task error: {0}")]
    Task(String),
}

impl Error {
    pub fn format(file: &Path, line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            file: file.display().to_string(),
            line,
            msg: msg.into(),
        }
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn task(msg: impl Into<String>) -> Self {
        Error::Task(msg.into())
    }

    /// Wraps an I/O failure on `path` as a resource error.
    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Error::Resource(format!("{}: {}", path.display(), err))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
