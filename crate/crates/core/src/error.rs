use thiserror::Error;

/// Errors raised by the domain model, estimators and simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// No observation is available where one is required (e.g. `N(τ) = 0`).
    #[error("no data: {0}")]
    NoData(String),

    #[error("not found: {0}")]
    NotFound(String),

    /// A configuration document could not be accepted.
    #[error("invalid config: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
