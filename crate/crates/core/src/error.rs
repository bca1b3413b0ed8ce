use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid geometry: {}", .0.join("; "))]
    InvalidGeometry(Vec<String>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("calibration error: {0}")]
    Calibration(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
