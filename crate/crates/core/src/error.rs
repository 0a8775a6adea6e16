use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("{what} must be finite and non-negative, got {value}")]
    InvalidParameter { what: &'static str, value: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e}, tolerance {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("trace is {trace}, expected 1 within {tolerance:e}")]
    TraceNotOne { trace: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("invalid model: {}", format_violations(.0))]
    InvalidModel(Vec<Violation>),

    #[error("state {state} is not coupled to the reservoir")]
    NotInChannelSet { state: usize },

    #[error("dephasing requires the two-level closed form; the general solver handles dephasing_rate = 0 only")]
    DephasingUnsupported,

    #[error("map is not completely positive: {detail}")]
    NotCompletelyPositive { detail: String },

    #[error("transition frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),

    #[error("superoperator for dimension {dim} exceeds the configured limit {limit}")]
    OracleTooLarge { dim: usize, limit: usize },

    #[error("linear algebra failure: {0}")]
    Lapack(String),

    #[error("malformed input: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Schema(err.to_string())
    }
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(err: ndarray_linalg::error::LinalgError) -> Self {
        Error::Lapack(err.to_string())
    }
}
