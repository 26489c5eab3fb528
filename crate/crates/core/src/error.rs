//! Error type shared by the numeric and registry layers.

use thiserror::Error;

/// Errors raised by evaluators, the engine and the suite runner.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// The certified error could not be pushed below the target.
    #[error("{op} failed to converge: error bound {achieved:e} above target {target:e} after {terms} terms")]
    ConvergenceFailure {
        op: &'static str,
        achieved: f64,
        target: f64,
        terms: u64,
    },

    /// Invalid precision settings.
    #[error("invalid precision context: {0}")]
    Precision(String),

    /// Invalid suite or command configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Evaluation failure of a registry identity at a parameter point.
    #[error("{id} at {point}: {source}")]
    Identity {
        id: String,
        point: String,
        #[source]
        source: Box<Error>,
    },

    /// I/O failure while writing a report.
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
