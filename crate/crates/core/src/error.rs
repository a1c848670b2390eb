use thiserror::Error;

/// Errors surfaced by model construction, configuration and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid transition matrix: {0}")]
    InvalidTransitionMatrix(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("parameter outside the natural parameter domain: {0}")]
    OutsideDomain(String),

    #[error("config error: {0}")]
    Config(#[from] toml::de::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
