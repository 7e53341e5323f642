//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by builders, sequence engines and the norm kernel.
///
/// Numeric payloads are carried as `f64` regardless of the working scalar
/// so the error type stays non-generic.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("non-finite coefficient at index {index}")]
    NonFiniteCoefficient { index: i64 },

    #[error("duplicate coefficient index {index}")]
    DuplicateIndex { index: i64 },

    #[error("Blaschke zero with |a| = {modulus} lies outside the open unit disk")]
    ZeroOutsideDisk { modulus: f64 },

    #[error("evaluation grid of size {grid} is too small; need at least {required}")]
    GridTooSmall { grid: usize, required: usize },

    #[error("truncation order {order} cannot reach tail tolerance {tol:e}; need at least {required}")]
    TruncationTooSmall {
        order: usize,
        required: usize,
        tol: f64,
    },

    #[error("symbol has negative-index coefficients; an analytic symbol is required")]
    NotAnalytic,

    #[error("symbol is not certified as a disk self-map: grid sup-norm {sup_norm} exceeds 1")]
    NotSelfMap { sup_norm: f64 },

    #[error("dimension mismatch: {context} (got {got}, expected {expected})")]
    DimensionMismatch {
        context: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("matrix of dimension {dim} is too small for window size {window} plus offset {offset}")]
    WindowTooLarge {
        dim: usize,
        window: usize,
        offset: usize,
    },

    #[error("norm iteration did not converge within {iterations} steps; best estimate {estimate} with residual {residual:e}")]
    NormNonConvergence {
        estimate: f64,
        residual: f64,
        iterations: usize,
    },

    #[error("trace does not retain the matrices required by this operation ({context})")]
    MatricesDropped { context: &'static str },

    #[error("trace too short: {len} steps, need at least {required}")]
    TraceTooShort { len: usize, required: usize },

    #[error("decomposition requires a converged verdict, got {status}")]
    NotConverged { status: &'static str },

    #[error("fixed-point certificate failed: residual {residual:e} exceeds {tol:e}")]
    CertificateFailed { residual: f64, tol: f64 },

    #[error("spectrum of the operator is not readable ({context})")]
    SpectrumUnreadable { context: &'static str },

    #[error("atom location |z| = {modulus} exceeds the closed unit disk")]
    AtomOutsideDisk { modulus: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<V> = std::result::Result<V, Error>;
