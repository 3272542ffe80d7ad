use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("weights not implemented for this fundamental: {0}")]
    WeightsNotImplemented(String),

    #[error("not a virtual character: {0}")]
    NotVirtualCharacter(String),

    #[error("pair queue overflow: more than {limit} pending S-pairs")]
    PairQueueOverflow { limit: usize },

    #[error("quadratization failed: {reason}; aux so far: [{aux}]; non-quadratic generators: [{remaining}]")]
    QuadratizationFailed {
        reason: String,
        aux: String,
        remaining: String,
    },

    #[error("identity not claimed here: {0}")]
    NotClaimed(String),

    #[error("computation error: {0}")]
    Computation(String),

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
