//! Model space of a finite Blaschke product, realized by the
//! Takenaka–Malmquist orthonormal basis.
//!
//! For zeros `a_0, ..., a_{d-1}` the basis functions are
//!
//! ```text
//! φ_j(z) = √(1-|a_j|²)/(1 - ā_j z) · Π_{i<j} (a_i - z)/(1 - ā_i z)
//! ```
//!
//! which are exactly orthonormal and span `H² ⊖ θH²`. Truncating a naive
//! `θH²` column basis would collapse the projection (a truncated analytic
//! Toeplitz matrix with nonzero diagonal is invertible), so the model
//! space is built from these tail-controlled columns instead. Each column
//! is phase-normalized so its first nonzero coefficient is positive real;
//! this pins matrix entries without affecting spans or norms.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::operators::matrix::{BasisTag, OperatorMatrix};
use crate::scalar::{real, Real};
use crate::symbols::{BlaschkeSpec, TrigSymbol};

/// Geometric-tail target used to size basis truncations.
const TAIL_TARGET: f64 = 1e-12;

/// Orthonormal coefficient columns for the model space of a finite
/// Blaschke product.
#[derive(Debug, Clone)]
pub struct ModelBasis<T: Real> {
    theta: BlaschkeSpec<T>,
    /// `columns[j][i]` = i-th Taylor coefficient of the j-th basis function.
    columns: Vec<Vec<Complex<T>>>,
    order: usize,
    ortho_residual: T,
}

impl<T: Real> ModelBasis<T> {
    pub fn theta(&self) -> &BlaschkeSpec<T> {
        &self.theta
    }

    pub fn degree(&self) -> usize {
        self.columns.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Largest deviation of the coefficient Gram matrix from the identity.
    pub fn ortho_residual(&self) -> T {
        self.ortho_residual
    }

    pub fn column(&self, j: usize) -> &[Complex<T>] {
        &self.columns[j]
    }
}

/// Build the Takenaka–Malmquist basis to Taylor order `order`.
///
/// Fails when `order` cannot push the geometric tails below `1e-12`; the
/// error carries the order that would.
pub fn tm_basis<T: Real>(theta: &BlaschkeSpec<T>, order: usize) -> Result<ModelBasis<T>> {
    let d = theta.degree();
    if d == 0 {
        return Err(Error::InvalidParameter(
            "model space needs a Blaschke product of degree at least 1".into(),
        ));
    }
    let required = theta.required_order(real(TAIL_TARGET));
    if order < required.max(d) {
        return Err(Error::TruncationTooSmall {
            order,
            required: required.max(d),
            tol: TAIL_TARGET,
        });
    }
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let mut columns: Vec<Vec<Complex<T>>> = Vec::with_capacity(d);
    // Running product of the first j Blaschke factors.
    let mut running: Vec<Complex<T>> = vec![zero; order + 1];
    running[0] = one;
    for &a in theta.zeros() {
        // kernel part: √(1-|a|²) Σ ā^k z^k, convolved with the running
        // product of the earlier factors
        let r2 = a.norm_sqr();
        let scale = (T::one() - r2).sqrt();
        let mut col = vec![zero; order + 1];
        let mut kernel = vec![zero; order + 1];
        let mut pw = Complex::new(scale, T::zero());
        for k in kernel.iter_mut() {
            *k = pw;
            pw *= a.conj();
        }
        for (t, &rt) in running.iter().enumerate() {
            if rt == zero {
                continue;
            }
            for (k, &kk) in kernel.iter().enumerate() {
                if t + k > order {
                    break;
                }
                col[t + k] += rt * kk;
            }
        }
        // phase normalization: first nonzero coefficient positive real
        if let Some(lead) = col.iter().find(|c| c.norm() > T::zero()) {
            let phase = lead.conj() / Complex::new(lead.norm(), T::zero());
            for c in col.iter_mut() {
                *c *= phase;
            }
        }
        columns.push(col);
        // extend the running product by this zero's factor
        let mut factor = vec![zero; order + 1];
        factor[0] = a;
        let fscale = Complex::new(r2 - T::one(), T::zero());
        let mut fpw = one;
        for f in factor.iter_mut().skip(1) {
            *f = fpw * fscale;
            fpw *= a.conj();
        }
        let mut next = vec![zero; order + 1];
        for (t, &rt) in running.iter().enumerate() {
            if rt == zero {
                continue;
            }
            for (k, &fk) in factor.iter().enumerate() {
                if t + k > order {
                    break;
                }
                next[t + k] += rt * fk;
            }
        }
        running = next;
    }
    // Gram residual
    let mut ortho_residual = T::zero();
    for p in 0..d {
        for q in 0..d {
            let mut g = zero;
            for (cp, cq) in columns[p].iter().zip(&columns[q]) {
                g += cp.conj() * *cq;
            }
            let target = if p == q { one } else { zero };
            ortho_residual = ortho_residual.max((g - target).norm());
        }
    }
    Ok(ModelBasis {
        theta: theta.clone(),
        columns,
        order,
        ortho_residual,
    })
}

/// Compression of multiplication by an analytic `f` to the model space:
/// the matrix of `f(S_θ)` in the Takenaka–Malmquist basis, computed as
/// `V* T_f V` on coefficient columns. `f = z` yields the model operator.
pub fn model_compression<T: Real>(
    basis: &ModelBasis<T>,
    f: &TrigSymbol<T>,
) -> Result<OperatorMatrix<T>> {
    if !f.is_analytic() {
        return Err(Error::NotAnalytic);
    }
    let d = basis.degree();
    let order = basis.order();
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = OperatorMatrix::zeros(d);
    for j in 0..d {
        // w = truncation of f · φ_j
        let col = basis.column(j);
        let mut w = vec![zero; order + 1];
        for (t, ft) in f.iter() {
            let t = t as usize;
            for (i, &ci) in col.iter().enumerate() {
                if i + t > order {
                    break;
                }
                w[i + t] += ft * ci;
            }
        }
        for r in 0..d {
            let mut g = zero;
            for (cr, wi) in basis.column(r).iter().zip(&w) {
                g += cr.conj() * *wi;
            }
            out[(r, j)] = g;
        }
    }
    Ok(out
        .with_basis(BasisTag::ModelSpace { degree: d })
        .with_meta("model-space compression"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{operator_norm, NormOptions};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tm_basis_for_z_squared_is_monomials() {
        let theta = BlaschkeSpec::new([c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let basis = tm_basis(&theta, 8).unwrap();
        assert_eq!(basis.degree(), 2);
        assert_eq!(basis.column(0)[0], c(1.0, 0.0));
        assert_eq!(basis.column(1)[1], c(1.0, 0.0));
        assert_eq!(basis.column(1)[0], c(0.0, 0.0));
        assert!(basis.ortho_residual() < 1e-15);
    }

    #[test]
    fn tm_basis_single_zero_is_normalized_kernel() {
        let theta = BlaschkeSpec::new([c(0.5, 0.0)]).unwrap();
        let basis = tm_basis(&theta, 256).unwrap();
        let scale = 0.75f64.sqrt();
        for i in 0..6 {
            let expect = scale * 0.5f64.powi(i as i32);
            assert!((basis.column(0)[i] - c(expect, 0.0)).norm() < 1e-14);
        }
        assert!(basis.ortho_residual() < 1e-12);
    }

    #[test]
    fn tm_basis_two_zeros_orthonormal() {
        let theta = BlaschkeSpec::new([c(0.5, 0.0), c(-0.5, 0.0)]).unwrap();
        let basis = tm_basis(&theta, 256).unwrap();
        assert!(basis.ortho_residual() < 1e-12, "{}", basis.ortho_residual());
    }

    #[test]
    fn tm_basis_rejects_small_order() {
        let theta = BlaschkeSpec::new([c(0.9, 0.0)]).unwrap();
        match tm_basis(&theta, 16) {
            Err(Error::TruncationTooSmall { required, .. }) => {
                assert!(required > 16);
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
    }

    #[test]
    fn model_operator_for_z_squared_is_jordan_block() {
        let theta = BlaschkeSpec::new([c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let basis = tm_basis(&theta, 8).unwrap();
        let z = TrigSymbol::monomial(1);
        let s = model_compression(&basis, &z).unwrap();
        assert!((s[(1, 0)] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(s[(0, 0)].norm() < 1e-14);
        assert!(s[(0, 1)].norm() < 1e-14);
        assert!(s[(1, 1)].norm() < 1e-14);
        let est = operator_norm(&s, &NormOptions::default()).unwrap();
        assert!((est.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn model_operator_single_zero_is_scalar() {
        let theta = BlaschkeSpec::new([c(0.5, 0.0)]).unwrap();
        let basis = tm_basis(&theta, 256).unwrap();
        let z = TrigSymbol::monomial(1);
        let s = model_compression(&basis, &z).unwrap();
        assert_eq!(s.dim(), 1);
        assert!((s[(0, 0)] - c(0.5, 0.0)).norm() < 1e-13, "{}", s[(0, 0)]);
    }

    #[test]
    fn model_compression_of_one_is_identity() {
        let theta = BlaschkeSpec::new([c(0.3, 0.2), c(-0.4, 0.0), c(0.0, 0.6)]).unwrap();
        let basis = tm_basis(&theta, 256).unwrap();
        let one = TrigSymbol::constant(c(1.0, 0.0));
        let m = model_compression(&basis, &one).unwrap();
        assert!(m.max_abs_diff(&OperatorMatrix::identity(3)).unwrap() < 1e-12);
    }

    #[test]
    fn model_compression_rejects_coanalytic() {
        let theta = BlaschkeSpec::new([c(0.5, 0.0)]).unwrap();
        let basis = tm_basis(&theta, 256).unwrap();
        let zbar = TrigSymbol::<f64>::monomial(-1);
        assert!(matches!(
            model_compression(&basis, &zbar),
            Err(Error::NotAnalytic)
        ));
    }

    #[test]
    fn calculus_is_multiplicative() {
        let theta = BlaschkeSpec::new([c(0.5, 0.1), c(-0.2, 0.3)]).unwrap();
        let basis = tm_basis(&theta, 512).unwrap();
        let z = TrigSymbol::monomial(1);
        let z2 = TrigSymbol::monomial(2);
        let s = model_compression(&basis, &z).unwrap();
        let s2 = model_compression(&basis, &z2).unwrap();
        let ss = s.matmul(&s).unwrap();
        assert!(ss.max_abs_diff(&s2).unwrap() < 1e-11);
    }
}
