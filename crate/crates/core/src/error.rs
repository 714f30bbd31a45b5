use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration {config}: {reason}")]
    InvalidConfig { config: String, reason: String },

    #[error("invalid realization: {0}")]
    InvalidRealization(String),

    #[error("no improvement move applies to {config}: {reason}")]
    NotImprovable { config: String, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("placement failed after {attempts} attempts; try a larger slack")]
    PlacementFailed { attempts: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
