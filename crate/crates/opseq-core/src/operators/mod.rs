//! Concrete operators as finite matrices: Toeplitz, Hankel, composition,
//! rank-one, diagonal-normal, and model-space compressions, plus the
//! spectral-norm kernel.

mod matrix;
mod model;
mod norm;

pub use matrix::{BasisTag, OperatorMatrix};
pub use model::{model_compression, tm_basis, ModelBasis};
pub use norm::{operator_norm, spectral_norm, NormEstimate, NormMethod, NormOptions};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::MeasureAtoms;
use crate::symbols::TrigSymbol;

/// Toeplitz compression: entry `(i, j) = φ̂(i - j)`. Exact for
/// trigonometric polynomials.
pub fn toeplitz_matrix<T: Real>(phi: &TrigSymbol<T>, n: usize) -> OperatorMatrix<T> {
    OperatorMatrix::from_fn(n, |i, j| phi.coeff(i as i64 - j as i64))
        .with_meta("toeplitz compression")
}

/// Hankel matrix: entry `(i, j) = φ̂(-(i + j + 1))`. Its norm realizes the
/// distance from `φ` to the analytic functions.
pub fn hankel_matrix<T: Real>(phi: &TrigSymbol<T>, n: usize) -> OperatorMatrix<T> {
    OperatorMatrix::from_fn(n, |i, j| phi.coeff(-((i + j + 1) as i64)))
        .with_meta("hankel matrix")
}

/// Grid size used for the self-map certificate of composition symbols.
const SELF_MAP_GRID: usize = 8192;

/// Composition operator of an analytic polynomial self-map: column `k`
/// holds the Taylor coefficients of `φ^k` truncated to length `n`.
///
/// Rejects symbols with negative-index coefficients and symbols whose
/// grid sup-norm exceeds 1 (no self-map certificate).
pub fn composition_matrix<T: Real>(phi: &TrigSymbol<T>, n: usize) -> Result<OperatorMatrix<T>> {
    if !phi.is_analytic() {
        return Err(Error::NotAnalytic);
    }
    let grid = SELF_MAP_GRID.max(4 * phi.span().max(1));
    let sup = phi.sup_norm_grid(grid)?;
    let slack = crate::scalar::real::<T>(1e-12);
    if sup > T::one() + slack {
        return Err(Error::NotSelfMap {
            sup_norm: sup.to_f64().unwrap_or(f64::NAN),
        });
    }
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = OperatorMatrix::zeros(n);
    // column 0 = coefficients of φ⁰ = 1
    let mut col = vec![zero; n];
    col[0] = Complex::new(T::one(), T::zero());
    out[(0, 0)] = col[0];
    for k in 1..n {
        // col ← truncation of col · φ
        let mut next = vec![zero; n];
        for (i, &c) in col.iter().enumerate() {
            if c == zero {
                continue;
            }
            for (t, ct) in phi.iter() {
                let row = i as i64 + t;
                if row >= 0 && (row as usize) < n {
                    next[row as usize] += c * ct;
                }
            }
        }
        col = next;
        for (i, &c) in col.iter().enumerate() {
            out[(i, k)] = c;
        }
    }
    Ok(out.with_meta("composition operator"))
}

/// Rank-one operator `x ⊗ y : z ↦ ⟨z, y⟩ x`, entries `x_i · conj(y_j)`.
pub fn rank_one_matrix<T: Real>(
    x: &[Complex<T>],
    y: &[Complex<T>],
) -> Result<OperatorMatrix<T>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            context: "rank-one factors",
            got: y.len(),
            expected: x.len(),
        });
    }
    Ok(OperatorMatrix::from_fn(x.len(), |i, j| x[i] * y[j].conj()).with_meta("rank one"))
}

/// Diagonal normal operator from atom locations.
pub fn diagonal_from_atoms<T: Real>(atoms: &MeasureAtoms<T>) -> OperatorMatrix<T> {
    let locs = atoms.locations();
    let mut m = OperatorMatrix::zeros(locs.len());
    for (i, z) in locs.iter().enumerate() {
        m[(i, i)] = *z;
    }
    m.with_basis(BasisTag::Atomic {
        atoms: atoms.clone(),
    })
    .with_meta("diagonal normal operator")
}

/// Standard basis vector of length `n`.
pub fn basis_vector<T: Real>(n: usize, k: usize) -> Vec<Complex<T>> {
    let mut v = vec![Complex::new(T::zero(), T::zero()); n];
    v[k] = Complex::new(T::one(), T::zero());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{trig_from_coeffs, BlaschkeSpec};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn opts() -> NormOptions<f64> {
        NormOptions::default()
    }

    #[test]
    fn toeplitz_half_plus_z() {
        let phi = trig_from_coeffs(&[(0, c(0.5, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        let t = toeplitz_matrix(&phi, 3);
        let expect = [
            [c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0)],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t[(i, j)], expect[i][j]);
            }
        }
    }

    #[test]
    fn toeplitz_constant_and_shift() {
        let one = TrigSymbol::constant(c(1.0, 0.0));
        assert_eq!(toeplitz_matrix(&one, 4), OperatorMatrix::identity(4).with_meta("toeplitz compression"));
        let z = TrigSymbol::<f64>::monomial(1);
        let s = toeplitz_matrix(&z, 2);
        assert_eq!(s[(1, 0)], c(1.0, 0.0));
        assert_eq!(s[(0, 0)], c(0.0, 0.0));
        assert_eq!(s[(0, 1)], c(0.0, 0.0));
    }

    #[test]
    fn hankel_of_zbar_is_corner_unit() {
        let zbar = TrigSymbol::<f64>::monomial(-1);
        let h = hankel_matrix(&zbar, 3);
        assert_eq!(h[(0, 0)], c(1.0, 0.0));
        for i in 0..3 {
            for j in 0..3 {
                if (i, j) != (0, 0) {
                    assert_eq!(h[(i, j)], c(0.0, 0.0));
                }
            }
        }
        let est = operator_norm(&h, &opts()).unwrap();
        assert!((est.value - 1.0).abs() < 1e-13);
    }

    #[test]
    fn hankel_of_analytic_is_zero() {
        let phi = trig_from_coeffs(&[(0, c(2.0, 0.0)), (3, c(-1.0, 0.5))]).unwrap();
        let h = hankel_matrix(&phi, 8);
        assert_eq!(h.max_abs(), 0.0);
    }

    #[test]
    fn hankel_geometric_rank_one() {
        // θ = Blaschke factor at 0.5; φ = θ̄·z has Hankel entries
        // −0.75·0.5^{i+j+1}, a rank-one matrix of norm 0.5.
        let theta = BlaschkeSpec::new([c(0.5, 0.0)]).unwrap().symbol(400).unwrap();
        let phi = theta.conj_reflect().rotate(1);
        let n = 64;
        let h = hankel_matrix(&phi, n);
        for i in 0..6 {
            for j in 0..6 {
                let expect = -0.75 * 0.5f64.powi((i + j + 1) as i32);
                assert!(
                    (h[(i, j)] - c(expect, 0.0)).norm() < 1e-12,
                    "entry ({i},{j}) = {}",
                    h[(i, j)]
                );
            }
        }
        let est = operator_norm(&h, &opts()).unwrap();
        assert!((est.value - 0.5).abs() < 1e-10, "{}", est.value);
    }

    #[test]
    fn composition_of_half_z_is_diagonal() {
        let phi = trig_from_coeffs(&[(1, c(0.5, 0.0))]).unwrap();
        let m = composition_matrix(&phi, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { c(0.5f64.powi(i as i32), 0.0) } else { c(0.0, 0.0) };
                assert_eq!(m[(i, j)], expect);
            }
        }
    }

    #[test]
    fn composition_of_z_is_identity() {
        let z = TrigSymbol::<f64>::monomial(1);
        let m = composition_matrix(&z, 5).unwrap();
        assert_eq!(m.max_abs_diff(&OperatorMatrix::identity(5)).unwrap(), 0.0);
    }

    #[test]
    fn composition_of_z_squared_hits_even_rows() {
        let z2 = TrigSymbol::<f64>::monomial(2);
        let m = composition_matrix(&z2, 5).unwrap();
        for k in 0..3 {
            assert_eq!(m[(2 * k, k)], c(1.0, 0.0));
        }
        assert_eq!(m[(1, 1)], c(0.0, 0.0));
        assert_eq!(m[(3, 2)], c(0.0, 0.0));
    }

    #[test]
    fn composition_rejects_non_self_map() {
        let phi = trig_from_coeffs(&[(1, c(2.0, 0.0))]).unwrap();
        assert!(matches!(
            composition_matrix(&phi, 4),
            Err(Error::NotSelfMap { .. })
        ));
        let zbar = TrigSymbol::<f64>::monomial(-1);
        assert!(matches!(composition_matrix(&zbar, 4), Err(Error::NotAnalytic)));
    }

    #[test]
    fn rank_one_examples() {
        let e0 = basis_vector::<f64>(2, 0);
        let m = rank_one_matrix(&e0, &e0).unwrap();
        assert_eq!(m[(0, 0)], c(1.0, 0.0));
        assert_eq!(m[(1, 1)], c(0.0, 0.0));

        let zero = vec![c(0.0, 0.0); 2];
        assert_eq!(rank_one_matrix(&e0, &zero).unwrap().max_abs(), 0.0);

        let x = vec![c(1.0, 0.0), c(1.0, 0.0)];
        let m = rank_one_matrix(&x, &e0).unwrap();
        assert_eq!(m[(0, 0)], c(1.0, 0.0));
        assert_eq!(m[(1, 0)], c(1.0, 0.0));
        assert_eq!(m[(0, 1)], c(0.0, 0.0));
    }

    #[test]
    fn diagonal_from_atom_locations() {
        let atoms = MeasureAtoms::from_locations([c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)]);
        let d = diagonal_from_atoms(&atoms);
        assert_eq!(d[(0, 0)], c(1.0, 0.0));
        assert_eq!(d[(1, 1)], c(0.0, 1.0));
        assert_eq!(d[(2, 2)], c(-1.0, 0.0));
        assert_eq!(d[(0, 1)], c(0.0, 0.0));
    }

    #[test]
    fn toeplitz_norm_approaches_symbol_sup() {
        let phi = trig_from_coeffs(&[(0, c(0.5, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        let t = toeplitz_matrix(&phi, 512);
        let est = operator_norm(&t, &opts()).unwrap();
        assert!((est.value - 1.5).abs() < 2e-3, "{}", est.value);
    }

    // Classical cross-check: T_φT_ψ − T_{φψ} = −H_{φ̃}* H_ψ where φ̃ is the
    // conjugate-reflection. At finite N the identity holds on the leading
    // block once the trailing corner is padded away.
    #[test]
    fn semi_commutator_identity() {
        let phi = trig_from_coeffs(&[(-1, c(0.5, 0.25)), (2, c(1.0, 0.0))]).unwrap();
        let psi = trig_from_coeffs(&[(-2, c(0.0, 1.0)), (1, c(-0.5, 0.0))]).unwrap();
        let n = 24;
        let pad = 4; // ≥ max symbol degree
        let big = n + pad;
        let prod = toeplitz_matrix(&phi, big)
            .matmul(&toeplitz_matrix(&psi, big))
            .unwrap();
        let tprod = toeplitz_matrix(&phi.mul(&psi), big);
        let h_left = hankel_matrix(&phi.conj_reflect(), big);
        let h_right = hankel_matrix(&psi, big);
        let correction = h_left.adjoint().matmul(&h_right).unwrap();
        let lhs = prod.sub(&tprod).unwrap().window(0, n).unwrap();
        let rhs = correction.scale(c(-1.0, 0.0)).window(0, n).unwrap();
        assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-12);
    }
}
