//! Error types shared across the library.

use thiserror::Error;

/// Errors raised by graph construction, parameter validation, and the
/// individual control/stability operations.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{what} index {index} out of range (n = {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("distance must be non-negative, got {0}")]
    NegativeDistance(f64),

    #[error("non-finite input in {0}")]
    NonFinite(&'static str),

    #[error("unsupported attitude: u_z + g = {vertical} must be positive")]
    UnsupportedAttitude { vertical: f64 },

    #[error("gains infeasible: {0}")]
    InfeasibleGains(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("symmetric eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
