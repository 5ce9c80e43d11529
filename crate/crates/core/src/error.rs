use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("boundary signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("web is not planar: {0}")]
    NotPlanar(String),

    /// The configuration lies outside the regime where the level-k theory
    /// agrees with the classical one; no value is defined there.
    #[error("unsupported regime: {0}")]
    Unsupported(String),

    /// An invariant that should hold by construction failed.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
