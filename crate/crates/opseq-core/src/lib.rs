//! A numerical laboratory for operator sequences on finite compressions.
//!
//! The crate builds concrete Hilbert-space operators as dense complex
//! matrices — Toeplitz, Hankel, composition, model-space and diagonal
//! normal operators — and studies the sequences `AⁿTBⁿ` and their Cesàro
//! averages on exact window compressions: convergence verdicts,
//! Toeplitz-plus-compact decompositions, essential-norm estimates,
//! best-approximation distances through Hankel norms, and atomic
//! spectral-measure limits.
//!
//! All numerics are generic over the real scalar (`f32` or `f64`) through
//! the [`scalar::Real`] trait; concrete aliases live at the crate root.

pub mod asymptotics;
pub mod distances;
pub mod error;
pub mod operators;
pub mod scalar;
pub mod spectral;
pub mod symbols;

pub use error::{Error, Result};
pub use scalar::Real;

pub use operators::{
    basis_vector, composition_matrix, diagonal_from_atoms, hankel_matrix, model_compression,
    operator_norm, rank_one_matrix, spectral_norm, tm_basis, toeplitz_matrix, BasisTag,
    ModelBasis, NormEstimate, NormMethod, NormOptions, OperatorMatrix,
};
pub use symbols::{
    blaschke_symbol, sup_norm_grid, symbol_conj_reflect, symbol_mul, symbol_rotate,
    trig_from_coeffs, BlaschkeSpec, TrigSymbol,
};

pub use asymptotics::{
    asymptotic_decomposition, averaged_operator, cesaro_trace, conjugation_sequence,
    detect_convergence, ess_norm_estimate, perturbation_gap_check, tauberian_report,
    window_sequence, ConvergenceEvidence, ConvergenceStatus, ConvergenceVerdict,
    DecompositionResult, EssNormReport, FixedPointPair, GapReport, Retention, SequenceStep,
    SequenceTrace, TauberianReport, TraceKind,
};
pub use distances::{
    dist_hinf, dist_hinf_plus_c, hartman_sarason_report, peripheral_sup_check, sigma_u_estimate,
    DistanceTrace, HartmanSarasonReport, PeripheralSupReport, PeripheralTarget, SigmaUReport,
};
pub use spectral::{
    cesaro_limit_atoms, local_spectrum_support, mu_from_atoms, power_convergence_verdict,
    CesaroAtomsResult, LocalSpectrumReport, MeasureAtoms, PowerVerdictAtoms, VectorOnAtoms,
};

/// f64 working aliases.
pub type Symbol64 = TrigSymbol<f64>;
pub type Blaschke64 = BlaschkeSpec<f64>;
pub type Matrix64 = OperatorMatrix<f64>;
pub type Atoms64 = MeasureAtoms<f64>;
pub type Vector64 = VectorOnAtoms<f64>;

/// f32 aliases, for reduced-precision experiments.
pub type Symbol32 = TrigSymbol<f32>;
pub type Blaschke32 = BlaschkeSpec<f32>;
pub type Matrix32 = OperatorMatrix<f32>;
pub type Atoms32 = MeasureAtoms<f32>;
pub type Vector32 = VectorOnAtoms<f32>;
