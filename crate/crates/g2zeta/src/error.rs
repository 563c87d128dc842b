//! Error types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// What went wrong during a numeric evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalErrorKind {
    /// The input lies inside the exclusion radius of a declared pole.
    AtPole,
    /// A computed value failed an internal accuracy assertion.
    PrecisionLoss,
    /// The input lies outside the range the evaluators are tuned for.
    OutOfValidatedRange,
}

impl std::fmt::Display for EvalErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EvalErrorKind::AtPole => "at-pole",
            EvalErrorKind::PrecisionLoss => "precision-loss",
            EvalErrorKind::OutOfValidatedRange => "out-of-validated-range",
        };
        f.write_str(s)
    }
}

/// Evaluation failure at a specific point.
#[derive(Debug, Clone, Error)]
#[error("{kind} at {location}: {detail}")]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub location: Complex64,
    pub detail: String,
}

impl EvalError {
    pub fn at_pole(location: Complex64, detail: impl Into<String>) -> Self {
        EvalError {
            kind: EvalErrorKind::AtPole,
            location,
            detail: detail.into(),
        }
    }

    pub fn precision_loss(location: Complex64, detail: impl Into<String>) -> Self {
        EvalError {
            kind: EvalErrorKind::PrecisionLoss,
            location,
            detail: detail.into(),
        }
    }

    pub fn out_of_range(location: Complex64, detail: impl Into<String>) -> Self {
        EvalError {
            kind: EvalErrorKind::OutOfValidatedRange,
            location,
            detail: detail.into(),
        }
    }
}

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Eval(#[from] EvalError),

    /// A zero sits too close to a winding contour even after dilation retries.
    #[error("zero too close to contour after {attempts} dilation attempts (min |f| = {min_abs:.3e})")]
    ContourNearZero { attempts: u32, min_abs: f64 },

    /// The accumulated phase around a contour did not round cleanly to an integer.
    #[error("winding number not close to an integer: raw phase {raw:.6} turns")]
    NonIntegerWinding { raw: f64 },

    /// Root refinement failed to converge.
    #[error("no convergence after {iterations} iterations (last |f| = {last_abs:.3e})")]
    NoConvergence { iterations: u32, last_abs: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
