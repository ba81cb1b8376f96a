//! Error types shared across the library.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum DimerError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("no steady state: smallest singular value {min_sv:.3e} exceeds tolerance {tol:.3e}")]
    NoSteadyState { min_sv: f64, tol: f64 },

    #[error("degenerate steady-state manifold of dimension {dim}; one element returned")]
    DegenerateSteadyManifold { dim: usize },

    #[error("eigensolver failure: {0}")]
    Eigensolver(String),

    #[error("linear solve failure: {0}")]
    LinearSolve(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, DimerError>;

impl From<ndarray_linalg::error::LinalgError> for DimerError {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        DimerError::LinearSolve(e.to_string())
    }
}
