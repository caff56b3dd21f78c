//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum LevyError {
    /// Model parameters violate a construction constraint.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// Evaluation point lies on or beyond an analyticity cut or pole.
    #[error("domain violation: {what} (cut/pole at {location})")]
    Domain { what: String, location: String },

    /// The SL measure of this model is purely atomic (HEJD); use the atom list.
    #[error("the SL measure of this model is purely atomic; query atoms instead")]
    AtomicMeasure,

    /// Operation requires a different drift regime (sign of mu1).
    #[error("regime violation: {0}")]
    Regime(String),

    /// Operation is not available for this model family.
    #[error("unsupported for this model: {0}")]
    Unsupported(String),

    /// A quadrature did not reach the requested tolerance.
    #[error("quadrature failure: achieved error estimate {achieved:.3e} exceeds tolerance {tol:.3e}")]
    Quadrature { achieved: f64, tol: f64 },

    /// A contour condition failed (branch winding, q+psi touching the negative axis).
    #[error("contour failure: {0}")]
    Contour(String),

    /// Root finding failed to converge.
    #[error("root finding failed: {what} (last iterate {last:.6e}, residual {residual:.3e})")]
    RootFind {
        what: String,
        last: f64,
        residual: f64,
    },

    /// Invalid argument combination.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A computed result failed an internal sanity bound.
    #[error("sanity failure: {0}")]
    Sanity(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, LevyError>;
