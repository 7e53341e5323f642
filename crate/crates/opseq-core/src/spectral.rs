//! Atomic spectral-measure experiments for normal contractions.
//!
//! A normal operator is modeled by finitely many atoms `z_j` of its
//! spectral measure; a vector is a list of components aligned with the
//! atoms. The operator acts diagonally, the spectral projection `P(Δ)`
//! keeps the components whose atom lies in `Δ`, and `μ_x` places weight
//! `|x_j|²` at `z_j`. Analytic limits (spectral projections) are always
//! cross-checked against explicit iteration.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Absolute tolerance identifying an atom with the point 1 (and with the
/// unit circle).
pub const ATOM_IDENTITY_TOL: f64 = 1e-14;

/// Cap for explicit-iteration cross-checks.
pub const CROSS_CHECK_CAP: usize = 10_000;

/// An atomic measure: locations with nonnegative weights.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureAtoms<T: Real> {
    atoms: Vec<(Complex<T>, T)>,
}

impl<T: Real> MeasureAtoms<T> {
    pub fn new(atoms: impl IntoIterator<Item = (Complex<T>, T)>) -> Result<Self> {
        let atoms: Vec<(Complex<T>, T)> = atoms.into_iter().collect();
        for (z, w) in &atoms {
            if !z.re.is_finite() || !z.im.is_finite() || !w.is_finite() || *w < T::zero() {
                return Err(Error::InvalidParameter(
                    "atoms need finite locations and nonnegative weights".into(),
                ));
            }
        }
        Ok(MeasureAtoms { atoms })
    }

    /// Locations only, all weights zero (a spectrum without a vector yet).
    pub fn from_locations(locations: impl IntoIterator<Item = Complex<T>>) -> Self {
        MeasureAtoms {
            atoms: locations.into_iter().map(|z| (z, T::zero())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Complex<T>, T)> + '_ {
        self.atoms.iter().copied()
    }

    pub fn locations(&self) -> Vec<Complex<T>> {
        self.atoms.iter().map(|(z, _)| *z).collect()
    }

    pub fn total_mass(&self) -> T {
        self.atoms.iter().map(|(_, w)| *w).sum()
    }

    /// Closed support: locations carrying strictly positive weight.
    pub fn support(&self) -> Vec<Complex<T>> {
        self.atoms
            .iter()
            .filter(|(_, w)| *w > T::zero())
            .map(|(z, _)| *z)
            .collect()
    }
}

impl<T: Real + Serialize> Serialize for MeasureAtoms<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<(&T, &T, &T)> = self
            .atoms
            .iter()
            .map(|(z, w)| (&z.re, &z.im, w))
            .collect();
        wire.serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for MeasureAtoms<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire: Vec<(T, T, T)> = Vec::deserialize(deserializer)?;
        MeasureAtoms::new(
            wire.into_iter()
                .map(|(re, im, w)| (Complex::new(re, im), w)),
        )
        .map_err(D::Error::custom)
    }
}

/// A vector expressed in the atomic basis.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorOnAtoms<T: Real> {
    values: Vec<Complex<T>>,
}

impl<T: Real> VectorOnAtoms<T> {
    pub fn new(values: impl IntoIterator<Item = Complex<T>>) -> Result<Self> {
        let values: Vec<Complex<T>> = values.into_iter().collect();
        for v in &values {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::InvalidParameter(
                    "vector entries must be finite".into(),
                ));
            }
        }
        Ok(VectorOnAtoms { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn norm(&self) -> T {
        self.values
            .iter()
            .map(|v| v.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn distance(&self, other: &Self) -> T {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (*a - *b).norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }
}

fn check_aligned<T: Real>(locations: &[Complex<T>], x: &VectorOnAtoms<T>) -> Result<()> {
    if locations.len() != x.len() {
        return Err(Error::DimensionMismatch {
            context: "atoms and vector must align",
            got: x.len(),
            expected: locations.len(),
        });
    }
    Ok(())
}

fn check_contraction<T: Real>(locations: &[Complex<T>]) -> Result<()> {
    let slack = real::<T>(ATOM_IDENTITY_TOL);
    for z in locations {
        if z.norm() > T::one() + slack {
            return Err(Error::AtomOutsideDisk {
                modulus: z.norm().to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(())
}

fn is_at_one<T: Real>(z: Complex<T>) -> bool {
    (z - Complex::new(T::one(), T::zero())).norm() <= real(ATOM_IDENTITY_TOL)
}

fn is_on_circle<T: Real>(z: Complex<T>) -> bool {
    (z.norm() - T::one()).abs() <= real(ATOM_IDENTITY_TOL)
}

/// Scalar measure `μ_x`: weight `|x_j|²` at each atom location.
pub fn mu_from_atoms<T: Real>(
    locations: &[Complex<T>],
    x: &VectorOnAtoms<T>,
) -> Result<MeasureAtoms<T>> {
    check_aligned(locations, x)?;
    MeasureAtoms::new(
        locations
            .iter()
            .zip(x.values())
            .map(|(z, v)| (*z, v.norm_sqr())),
    )
}

#[derive(Debug, Clone)]
pub struct CesaroAtomsResult<T: Real> {
    /// The mean ergodic limit: components kept at atoms identified with 1,
    /// zeroed elsewhere.
    pub limit: VectorOnAtoms<T>,
    /// Distance between the analytic limit and the explicit average at the
    /// deepest step taken.
    pub cross_check_residual: T,
    pub steps_used: usize,
}

/// Cesàro limit of `{Nⁿx}` for the diagonal contraction with the given
/// atoms: the spectral projection onto the eigenspace at 1.
pub fn cesaro_limit_atoms<T: Real>(
    locations: &[Complex<T>],
    x: &VectorOnAtoms<T>,
) -> Result<CesaroAtomsResult<T>> {
    check_aligned(locations, x)?;
    check_contraction(locations)?;
    let zero = Complex::new(T::zero(), T::zero());
    let limit = VectorOnAtoms::new(
        locations
            .iter()
            .zip(x.values())
            .map(|(z, v)| if is_at_one(*z) { *v } else { zero }),
    )?;

    // Explicit running average, independent of the projection formula.
    let n_atoms = locations.len();
    let mut power: Vec<Complex<T>> = x.values().to_vec();
    let mut sum: Vec<Complex<T>> = vec![zero; n_atoms];
    let mut avg_prev: Vec<Complex<T>> = vec![zero; n_atoms];
    let mut steps_used = 0usize;
    let cauchy_exit = real::<T>(1e-16) * (x.norm() + T::one());
    for n in 1..=CROSS_CHECK_CAP {
        for (s, p) in sum.iter_mut().zip(&power) {
            *s += *p;
        }
        let inv = Complex::new(T::one() / real::<T>(n as f64), T::zero());
        let avg: Vec<Complex<T>> = sum.iter().map(|s| *s * inv).collect();
        for (p, z) in power.iter_mut().zip(locations) {
            *p *= *z;
        }
        steps_used = n;
        let moved = avg
            .iter()
            .zip(&avg_prev)
            .map(|(a, b)| (*a - *b).norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt();
        avg_prev = avg;
        if n > 1 && moved <= cauchy_exit {
            break;
        }
    }
    let cross_check_residual = limit
        .values()
        .iter()
        .zip(&avg_prev)
        .map(|(a, b)| (*a - *b).norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt();
    Ok(CesaroAtomsResult {
        limit,
        cross_check_residual,
        steps_used,
    })
}

#[derive(Debug, Clone)]
pub struct PowerVerdictAtoms<T: Real> {
    pub converges: bool,
    /// Spectral projection limit (valid when `converges`).
    pub limit: VectorOnAtoms<T>,
    /// Mass of `μ_x` sitting on the unit circle away from 1 — the
    /// obstruction to convergence.
    pub offending_mass: T,
    /// `‖Nⁿx − limit‖` at the deepest explicit iterate (meaningful when
    /// `converges`).
    pub cross_check_residual: T,
}

/// Power convergence criterion for a diagonal contraction: `{Nⁿx}`
/// converges iff `μ_x` carries no mass on the circle off the point 1;
/// the limit is then the projection onto the eigenspace at 1.
pub fn power_convergence_verdict<T: Real>(
    locations: &[Complex<T>],
    x: &VectorOnAtoms<T>,
    tol: T,
) -> Result<PowerVerdictAtoms<T>> {
    check_aligned(locations, x)?;
    check_contraction(locations)?;
    let zero = Complex::new(T::zero(), T::zero());
    let mut offending_mass = T::zero();
    for (z, v) in locations.iter().zip(x.values()) {
        if is_on_circle(*z) && !is_at_one(*z) {
            offending_mass += v.norm_sqr();
        }
    }
    let converges = offending_mass <= tol;
    let limit = VectorOnAtoms::new(
        locations
            .iter()
            .zip(x.values())
            .map(|(z, v)| if is_at_one(*z) { *v } else { zero }),
    )?;
    // Explicit iteration cross-check.
    let mut power: Vec<Complex<T>> = x.values().to_vec();
    let mut residual = distance_to(&power, limit.values());
    let exit = real::<T>(1e-16) * (x.norm() + T::one());
    for _ in 0..CROSS_CHECK_CAP {
        for (p, z) in power.iter_mut().zip(locations) {
            *p *= *z;
        }
        residual = distance_to(&power, limit.values());
        if residual <= exit {
            break;
        }
    }
    Ok(PowerVerdictAtoms {
        converges,
        limit,
        offending_mass,
        cross_check_residual: residual,
    })
}

fn distance_to<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    a.iter()
        .zip(b)
        .map(|(x, y)| (*x - *y).norm_sqr())
        .fold(T::zero(), |acc, d| acc + d)
        .sqrt()
}

#[derive(Debug, Clone)]
pub struct LocalSpectrumReport<T: Real> {
    /// Atom locations carrying `μ_x` weight above the tolerance.
    pub support: Vec<Complex<T>>,
    /// Whether `sup ‖Nⁿx‖` stayed bounded over the observation window.
    pub orbit_bounded: bool,
    pub max_orbit_norm: T,
    /// When the orbit looked bounded, whether every support point sits in
    /// the closed disk (up to 1e-12) — the containment the bounded-orbit
    /// lemma guarantees.
    pub disk_containment_ok: bool,
}

/// Support of the local scalar measure `μ_x`, with the bounded-orbit /
/// closed-disk consistency check (observed over `n ≤ 10³`).
pub fn local_spectrum_support<T: Real>(
    locations: &[Complex<T>],
    x: &VectorOnAtoms<T>,
    tol: T,
) -> Result<LocalSpectrumReport<T>> {
    check_aligned(locations, x)?;
    let support: Vec<Complex<T>> = locations
        .iter()
        .zip(x.values())
        .filter(|(_, v)| v.norm_sqr() > tol)
        .map(|(z, _)| *z)
        .collect();
    let mut power: Vec<Complex<T>> = x.values().to_vec();
    let mut max_norm = distance_to(&power, &vec![Complex::new(T::zero(), T::zero()); power.len()]);
    for _ in 0..1000 {
        for (p, z) in power.iter_mut().zip(locations) {
            *p *= *z;
        }
        let norm = power
            .iter()
            .map(|v| v.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt();
        max_norm = max_norm.max(norm);
        if !norm.is_finite() {
            break;
        }
    }
    let bound = real::<T>(1e6) * (x.norm() + T::one());
    let orbit_bounded = max_norm.is_finite() && max_norm <= bound;
    let slack = T::one() + real::<T>(1e-12);
    let disk_containment_ok =
        !orbit_bounded || support.iter().all(|z| z.norm() <= slack);
    Ok(LocalSpectrumReport {
        support,
        orbit_bounded,
        max_orbit_norm: max_norm,
        disk_containment_ok,
    })
}
