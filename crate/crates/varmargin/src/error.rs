//! Error types shared across the crate.

use crate::solver::TrainedModel;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A hyperplane with a zero (or non-finite) normal vector was used.
    #[error("invalid hyperplane: beta must be finite and nonzero")]
    InvalidHyperplane,

    /// An operation required members of a class that the dataset does not contain.
    #[error("missing class: no points labeled {label}")]
    MissingClass { label: i8 },

    /// Dataset construction or parsing failed.
    #[error("invalid dataset: {0}")]
    InvalidData(String),

    /// A vector argument had the wrong length.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Model and data dimensions are incompatible.
    #[error("dimension mismatch: model has {expected} features, data has {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The solver exhausted its iteration budget. The best iterate found so
    /// far is carried along so callers can still inspect or use it.
    #[error("solver did not converge within the iteration budget (best residual {residual:.3e})")]
    NotConverged {
        model: Box<TrainedModel>,
        residual: f64,
    },

    /// A generator spec was malformed; `field` names the offending entry.
    #[error("invalid spec field `{field}`: {reason}")]
    InvalidSpec { field: String, reason: String },

    /// A covariance matrix was not symmetric positive semidefinite.
    #[error("covariance is not positive semidefinite: {0}")]
    NotPsd(String),

    /// An operation required a dataset dimension the input does not have.
    #[error("unsupported dimension: expected p = {expected}, got p = {got}")]
    WrongDimension { expected: usize, got: usize },

    /// A model file failed validation on load.
    #[error("invalid model file: {0}")]
    InvalidModel(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for CLI use: 2 for spec errors, 3 for data errors,
    /// 4 for compatibility errors, 1 otherwise. Non-convergence is not an
    /// exit-worthy failure and is handled by callers before this is reached.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidSpec { .. } | Error::NotPsd(_) => 2,
            Error::InvalidData(_) | Error::MissingClass { .. } | Error::Io(_) => 3,
            Error::DimensionMismatch { .. } | Error::InvalidModel(_) => 4,
            _ => 1,
        }
    }
}
