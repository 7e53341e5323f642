//! Dense complex square matrices with a basis tag.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::MeasureAtoms;

/// Which finite basis the matrix entries refer to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum BasisTag<T: Real> {
    /// Leading monomials 1, z, ..., z^{N-1} of the Hardy space.
    HardyTruncation,
    /// Takenaka–Malmquist basis of the model space for a degree-`degree`
    /// Blaschke product.
    ModelSpace { degree: usize },
    /// Point masses of an atomic measure.
    Atomic { atoms: MeasureAtoms<T> },
}

/// A dense complex N×N compression of an operator.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix<T: Real> {
    dim: usize,
    entries: Vec<Complex<T>>, // row-major
    basis: BasisTag<T>,
    meta: String,
}

impl<T: Real> OperatorMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        OperatorMatrix {
            dim,
            entries: vec![Complex::new(T::zero(), T::zero()); dim * dim],
            basis: BasisTag::HardyTruncation,
            meta: String::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m.meta = "identity".to_string();
        m
    }

    /// Build from a row-major closure.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        OperatorMatrix {
            dim,
            entries,
            basis: BasisTag::HardyTruncation,
            meta: String::new(),
        }
    }

    pub fn with_basis(mut self, basis: BasisTag<T>) -> Self {
        self.basis = basis;
        self
    }

    pub fn with_meta(mut self, meta: impl Into<String>) -> Self {
        self.meta = meta.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &BasisTag<T> {
        &self.basis
    }

    pub fn meta(&self) -> &str {
        &self.meta
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other, "matrix addition")?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += *b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other, "matrix subtraction")?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= *b;
        }
        Ok(out)
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other, "matrix product")?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        out.basis = self.basis.clone();
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let dst = &mut out.entries[i * n..(i + 1) * n];
            for (k, &aik) in row.iter().enumerate() {
                if aik.re == T::zero() && aik.im == T::zero() {
                    continue;
                }
                let src = &other.entries[k * n..(k + 1) * n];
                for (d, &bkj) in dst.iter_mut().zip(src) {
                    *d += aik * bkj;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        out.basis = self.basis.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        out
    }

    /// The `size×size` submatrix at diagonal offset `offset`:
    /// entry `(i, j) ↦ self[(i+offset, j+offset)]`.
    pub fn window(&self, offset: usize, size: usize) -> Result<Self> {
        if offset + size > self.dim {
            return Err(Error::WindowTooLarge {
                dim: self.dim,
                window: size,
                offset,
            });
        }
        let mut out = Self::zeros(size);
        out.basis = self.basis.clone();
        for i in 0..size {
            for j in 0..size {
                out.entries[i * size + j] = self.entries[(i + offset) * self.dim + (j + offset)];
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn apply(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        debug_assert_eq!(x.len(), self.dim);
        let n = self.dim;
        let mut y = vec![Complex::new(T::zero(), T::zero()); n];
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let mut acc = Complex::new(T::zero(), T::zero());
            for (a, b) in row.iter().zip(x) {
                acc += *a * *b;
            }
            y[i] = acc;
        }
        y
    }

    /// Adjoint applied to a vector, without forming the adjoint matrix.
    pub fn apply_adjoint(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        debug_assert_eq!(x.len(), self.dim);
        let n = self.dim;
        let mut y = vec![Complex::new(T::zero(), T::zero()); n];
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let xi = x[i];
            for (yj, a) in y.iter_mut().zip(row) {
                *yj += a.conj() * xi;
            }
        }
        y
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .map(|c| c.norm())
            .fold(T::zero(), |a, b| a.max(b))
    }

    /// Largest entrywise difference; `∞` norm of the difference seen as a
    /// flat vector.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_same_dim(other, "entrywise comparison")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), |acc, d| acc.max(d)))
    }

    pub fn frobenius(&self) -> T {
        self.entries
            .iter()
            .map(|c| c.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Frobenius norm of the block `rows × cols`.
    pub fn block_frobenius(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> T {
        let mut acc = T::zero();
        for i in rows {
            for j in cols.clone() {
                acc += self.entries[i * self.dim + j].norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `(lower, upper)` bandwidths: largest `i - j` and `j - i` with a
    /// structurally nonzero entry. The zero matrix reports `(0, 0)`.
    pub fn bandwidths(&self) -> (usize, usize) {
        let n = self.dim;
        let mut lower = 0usize;
        let mut upper = 0usize;
        for i in 0..n {
            for j in 0..n {
                let e = self.entries[i * n + j];
                if e.re != T::zero() || e.im != T::zero() {
                    if i >= j {
                        lower = lower.max(i - j);
                    } else {
                        upper = upper.max(j - i);
                    }
                }
            }
        }
        (lower, upper)
    }

    /// Flat CSV dump, row-major `re,im` pairs — the golden-file format.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,re,im\n");
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.entries[i * self.dim + j];
                out.push_str(&format!("{},{},{},{}\n", i, j, e.re, e.im));
            }
        }
        out
    }

    /// Flat JSON dump: `{"dim": N, "entries": [[re, im], ...]}` row-major.
    pub fn to_json(&self) -> String
    where
        T: Serialize,
    {
        #[derive(Serialize)]
        struct Wire<'a, T> {
            dim: usize,
            entries: Vec<(&'a T, &'a T)>,
        }
        serde_json::to_string(&Wire {
            dim: self.dim,
            entries: self.entries.iter().map(|c| (&c.re, &c.im)).collect(),
        })
        .expect("matrix dump cannot fail")
    }

    fn check_same_dim(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                context,
                got: other.dim,
                expected: self.dim,
            });
        }
        Ok(())
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for OperatorMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.dim + j]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for OperatorMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn matmul_and_adjoint() {
        let a = OperatorMatrix::from_fn(2, |i, j| {
            if (i, j) == (0, 1) {
                c(2.0, 1.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let b = a.adjoint();
        assert_eq!(b[(1, 0)], c(2.0, -1.0));
        let p = a.matmul(&b).unwrap();
        assert_eq!(p[(0, 0)], c(5.0, 0.0));
    }

    #[test]
    fn window_extracts_shifted_block() {
        let m = OperatorMatrix::from_fn(4, |i, j| c((i * 4 + j) as f64, 0.0));
        let w = m.window(1, 2).unwrap();
        assert_eq!(w[(0, 0)], c(5.0, 0.0));
        assert_eq!(w[(1, 1)], c(10.0, 0.0));
        assert!(m.window(3, 2).is_err());
    }

    #[test]
    fn bandwidth_scan() {
        let mut m = OperatorMatrix::<f64>::zeros(5);
        m[(3, 1)] = c(1.0, 0.0);
        m[(0, 2)] = c(1.0, 0.0);
        assert_eq!(m.bandwidths(), (2, 2));
        assert_eq!(OperatorMatrix::<f64>::zeros(3).bandwidths(), (0, 0));
    }

    #[test]
    fn apply_adjoint_matches_adjoint_apply() {
        let m = OperatorMatrix::from_fn(3, |i, j| c(i as f64 - j as f64, (i * j) as f64));
        let x = vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 1.0)];
        let direct = m.adjoint().apply(&x);
        let fused = m.apply_adjoint(&x);
        for (a, b) in direct.iter().zip(&fused) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn golden_dump_is_stable() {
        let mut m = OperatorMatrix::<f64>::zeros(2);
        m[(0, 0)] = c(0.5, -1.0);
        m[(1, 0)] = c(2.0, 0.0);
        assert_eq!(m.to_csv(), "i,j,re,im\n0,0,0.5,-1\n0,1,0,0\n1,0,2,0\n1,1,0,0\n");
        assert_eq!(
            m.to_json(),
            r#"{"dim":2,"entries":[[0.5,-1.0],[0.0,0.0],[2.0,0.0],[0.0,0.0]]}"#
        );
    }
}
