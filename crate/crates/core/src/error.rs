use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's mathematical domain (negative square
    /// root, degenerate or invalid triangle, medians that do not match sides).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input is well formed but the operation needs something it lacks,
    /// typically exact medians.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A universal identity failed on a certified triangle. Only an
    /// implementation bug can produce this.
    #[error("audit failure on ({a}, {b}, {c}): {what}")]
    AuditFailed {
        a: String,
        b: String,
        c: String,
        what: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("malformed record: {0}")]
    Record(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
