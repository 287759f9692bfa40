//! Crate-wide error type.
//!
//! Two failure families matter to callers: domain/configuration problems
//! (CLI exit code 1) and numerical convergence failures (exit code 2).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Violated precondition or invariant (bad site index, invalid
    /// parameter, dimension mismatch, ...).
    #[error("{0}")]
    Domain(String),

    /// Configuration file problem with a line-numbered diagnostic.
    #[error("{path}:{line}: {msg}")]
    Config {
        path: String,
        line: usize,
        msg: String,
    },

    /// An iterative numerical method failed to reach its tolerance.
    #[error("{0}")]
    Convergence(String),

    /// Filesystem failure, annotated with the path involved.
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    /// Lookup of a named catalog entry failed; carries the listing.
    #[error("unknown {kind} `{name}`; available:\n{listing}")]
    UnknownName {
        kind: &'static str,
        name: String,
        listing: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }

    /// CLI process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Convergence(_) => 2,
            _ => 1,
        }
    }
}
