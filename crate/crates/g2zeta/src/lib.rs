//! Zeta functions attached to the exceptional group G2 and its two maximal
//! parabolic subgroups: symbolic construction of the underlying period,
//! residue extraction along the singular hyperplanes, numeric evaluation of
//! the resulting zeta functions and their auxiliary entire companions, and a
//! verification pipeline that counts zeros by the argument principle and
//! checks the functional equations, pole profiles, inequality grids, and
//! critical-line zero locations at desk scale.

pub mod cli;
pub mod config;
pub mod error;
pub mod exec;
pub mod period;
pub mod rhverify;
pub mod rootsystem;
pub mod special;
pub mod zeros;
pub mod zetas;

pub use error::{Error, EvalError, EvalErrorKind, Result};
pub use num_complex::Complex64;
