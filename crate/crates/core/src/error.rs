use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: rank must be at least 2")]
    InvalidRank(usize),
    #[error("dimension mismatch: expected rank {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("singular evaluation: {0}")]
    SingularEvaluation(String),
    #[error("certification failed: {0}")]
    CertificationFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
