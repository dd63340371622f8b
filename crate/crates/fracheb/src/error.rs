//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the numerical routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Gamma-function pole was hit at a non-positive integer argument.
    #[error("pole at non-positive integer argument: {0}")]
    Pole(String),

    /// A series or integral that provably diverges was requested.
    #[error("divergent request: {0}")]
    Divergence(String),

    /// The requested tolerance could not be met within the work budget.
    #[error("accuracy not reached: {0}")]
    Accuracy(String),

    /// A parameter combination the library deliberately does not cover.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    /// Malformed caller input (missing coefficients, bad flags, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
