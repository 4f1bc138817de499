use thiserror::Error;

/// Errors produced by the simulator.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operator is not Hermitian: entry ({row}, {col}) differs from the conjugate of ({col}, {row})")]
    NotHermitian { row: usize, col: usize },

    #[error("integration failure at t = {time_ps} ps: norm deviates from 1 by {drift:e}")]
    IntegrationFailure { time_ps: f64, drift: f64 },

    #[error("optimization failed: {0}")]
    Optimization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
