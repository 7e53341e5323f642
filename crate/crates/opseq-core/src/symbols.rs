//! Fourier-coefficient algebra for functions on the unit circle.
//!
//! A symbol is stored by its finitely many Fourier coefficients
//! `c_k = φ̂(k) = ∫ φ(e^{it}) e^{-ikt} dm(t)`, together with a certified
//! bound on the ℓ¹ mass of everything that was dropped by truncation.
//! Trigonometric polynomials are exact (`tail_bound = 0`); Blaschke
//! products are expanded to a requested order with a geometric tail
//! certificate.

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// A circle function with finitely supported Fourier coefficients.
///
/// `tail_bound` certifies `Σ |ĝ(k) - c_k| ≤ tail_bound` in ℓ¹ over all
/// indices, where `g` is the function the symbol approximates; since the
/// ℓ¹ coefficient norm dominates the sup norm, the stored polynomial is
/// uniformly within `tail_bound` of `g` on the circle.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigSymbol<T: Real> {
    coeffs: BTreeMap<i64, Complex<T>>,
    truncation_order: usize,
    tail_bound: T,
}

impl<T: Real> TrigSymbol<T> {
    /// The zero symbol.
    pub fn zero() -> Self {
        TrigSymbol {
            coeffs: BTreeMap::new(),
            truncation_order: 0,
            tail_bound: T::zero(),
        }
    }

    /// Exact trigonometric polynomial from `(index, coefficient)` pairs.
    ///
    /// Rejects duplicate indices and non-finite coefficients; zero
    /// coefficients are dropped.
    pub fn from_coeffs(entries: impl IntoIterator<Item = (i64, Complex<T>)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (k, c) in entries {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFiniteCoefficient { index: k });
            }
            if coeffs.insert(k, c).is_some() {
                return Err(Error::DuplicateIndex { index: k });
            }
        }
        coeffs.retain(|_, c| *c != Complex::new(T::zero(), T::zero()));
        let order = coeffs
            .keys()
            .map(|k| k.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        Ok(TrigSymbol {
            coeffs,
            truncation_order: order,
            tail_bound: T::zero(),
        })
    }

    /// The constant symbol `c`.
    pub fn constant(c: Complex<T>) -> Self {
        TrigSymbol::from_coeffs([(0, c)]).expect("constant symbol is always valid")
    }

    /// The monomial `z^k` (negative `k` gives `z̄^{|k|}`).
    pub fn monomial(k: i64) -> Self {
        TrigSymbol::from_coeffs([(k, Complex::new(T::one(), T::zero()))])
            .expect("monomial symbol is always valid")
    }

    pub(crate) fn from_parts(coeffs: BTreeMap<i64, Complex<T>>, tail_bound: T) -> Self {
        let order = coeffs
            .keys()
            .map(|k| k.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        TrigSymbol {
            coeffs,
            truncation_order: order,
            tail_bound,
        }
    }

    /// Coefficient `φ̂(k)`; zero outside the stored support.
    pub fn coeff(&self, k: i64) -> Complex<T> {
        self.coeffs
            .get(&k)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    /// Stored coefficients in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex<T>)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    pub fn support_min(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn support_max(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Width of the stored support, `max index - min index` (0 when empty).
    pub fn span(&self) -> usize {
        match (self.support_min(), self.support_max()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize,
            _ => 0,
        }
    }

    pub fn truncation_order(&self) -> usize {
        self.truncation_order
    }

    pub fn tail_bound(&self) -> T {
        self.tail_bound
    }

    /// True when no negative-index coefficient is stored.
    pub fn is_analytic(&self) -> bool {
        self.support_min().map_or(true, |lo| lo >= 0)
    }

    /// ℓ¹ norm of the stored coefficients.
    pub fn l1_norm(&self) -> T {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    /// Pointwise evaluation at `z` (intended for |z| = 1 or |z| < 1 with
    /// analytic symbols; negative indices use `z^{-1}` which on the circle
    /// is `z̄`).
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (&k, &c) in &self.coeffs {
            acc += c * powi(z, k);
        }
        acc
    }

    /// Product of two symbols by coefficient convolution.
    ///
    /// Tail bounds propagate by the ℓ¹ Banach-algebra estimate
    /// `‖fg - pq‖₁ ≤ ‖p‖₁·τ_q + τ_p·‖q‖₁ + τ_p·τ_q`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, Complex<T>> = BTreeMap::new();
        for (&j, &a) in &self.coeffs {
            for (&k, &b) in &other.coeffs {
                let entry = coeffs
                    .entry(j + k)
                    .or_insert_with(|| Complex::new(T::zero(), T::zero()));
                *entry += a * b;
            }
        }
        coeffs.retain(|_, c| c.norm() > T::zero());
        let tail = self.l1_norm() * other.tail_bound
            + self.tail_bound * other.l1_norm()
            + self.tail_bound * other.tail_bound;
        TrigSymbol::from_parts(coeffs, tail)
    }

    /// Sum of two symbols; tail bounds add.
    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&k, &c) in &other.coeffs {
            let entry = coeffs
                .entry(k)
                .or_insert_with(|| Complex::new(T::zero(), T::zero()));
            *entry += c;
        }
        coeffs.retain(|_, c| c.norm() > T::zero());
        TrigSymbol::from_parts(coeffs, self.tail_bound + other.tail_bound)
    }

    /// Scale all coefficients.
    pub fn scale(&self, s: Complex<T>) -> Self {
        let coeffs = self.coeffs.iter().map(|(&k, &c)| (k, c * s)).collect();
        TrigSymbol::from_parts(coeffs, self.tail_bound * s.norm())
    }

    /// Complex conjugate on the circle: the coefficient at `k` becomes the
    /// conjugate of the coefficient at `-k`.
    pub fn conj_reflect(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&k, &c)| (-k, c.conj())).collect();
        TrigSymbol::from_parts(coeffs, self.tail_bound)
    }

    /// Multiplication by `z^n`: every index shifts by `+n`.
    pub fn rotate(&self, n: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|(&k, &c)| (k + n, c)).collect();
        TrigSymbol::from_parts(coeffs, self.tail_bound)
    }

    /// Maximum modulus over the uniform grid `e^{2πim/G}`, a lower bound
    /// for `‖φ‖_∞` up to grid resolution (plus `tail_bound` for truncated
    /// symbols).
    ///
    /// Requires `G ≥ 4·span` so the grid resolves the highest oscillation.
    pub fn sup_norm_grid(&self, grid_size: usize) -> Result<T> {
        let required = 4 * self.span().max(1);
        if grid_size < required {
            return Err(Error::GridTooSmall {
                grid: grid_size,
                required,
            });
        }
        if self.coeffs.is_empty() {
            return Ok(T::zero());
        }
        // Roots-of-unity table keeps z^k evaluation exact in the exponent.
        let g = grid_size as i64;
        let two_pi = T::PI() + T::PI();
        let table: Vec<Complex<T>> = (0..grid_size)
            .map(|j| {
                let angle = two_pi * real::<T>(j as f64) / real::<T>(grid_size as f64);
                Complex::new(angle.cos(), angle.sin())
            })
            .collect();
        let mut best = T::zero();
        for m in 0..g {
            let mut acc = Complex::new(T::zero(), T::zero());
            for (&k, &c) in &self.coeffs {
                let idx = (k * m).rem_euclid(g) as usize;
                acc += c * table[idx];
            }
            best = best.max(acc.norm());
        }
        Ok(best)
    }
}

/// Integer power of a complex number, exact on exponent bookkeeping.
fn powi<T: Real>(z: Complex<T>, k: i64) -> Complex<T> {
    if k >= 0 {
        z.powu(k as u32)
    } else {
        z.powu((-k) as u32).finv()
    }
}

/// A finite Blaschke product given by its zeros in the open unit disk
/// (repetition encodes multiplicity).
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeSpec<T: Real> {
    zeros: Vec<Complex<T>>,
}

impl<T: Real> BlaschkeSpec<T> {
    pub fn new(zeros: impl IntoIterator<Item = Complex<T>>) -> Result<Self> {
        let zeros: Vec<Complex<T>> = zeros.into_iter().collect();
        for a in &zeros {
            if !(a.norm() < T::one()) {
                return Err(Error::ZeroOutsideDisk {
                    modulus: a.norm().to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(BlaschkeSpec { zeros })
    }

    pub fn zeros(&self) -> &[Complex<T>] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    /// Largest zero modulus; governs the geometric decay of all tails.
    pub fn max_modulus(&self) -> T {
        self.zeros
            .iter()
            .map(|a| a.norm())
            .fold(T::zero(), |acc, r| acc.max(r))
    }

    /// Direct evaluation of the product `Π (a_j - z)/(1 - ā_j z)` at a
    /// point of the open disk; exact up to rounding, no truncation.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        let mut acc = one;
        for &a in &self.zeros {
            acc *= (a - z) / (one - a.conj() * z);
        }
        acc
    }

    /// Taylor expansion of the Blaschke product to degree `order`.
    ///
    /// Single-factor coefficients are `c_0 = a`, `c_k = ā^{k-1}(|a|² - 1)`;
    /// factors are combined by truncated convolution, and the returned
    /// `tail_bound` certifies the total dropped ℓ¹ mass (factor tails are
    /// geometric, cross terms are accumulated exactly as they are cut).
    pub fn symbol(&self, order: usize) -> Result<TrigSymbol<T>> {
        if order < self.degree() {
            return Err(Error::TruncationTooSmall {
                order,
                required: self.degree(),
                tol: 0.0,
            });
        }
        let one = T::one();
        let mut acc: Vec<Complex<T>> = vec![Complex::new(T::zero(), T::zero()); order + 1];
        acc[0] = Complex::new(one, T::zero());
        let mut acc_tail = T::zero();
        for &a in &self.zeros {
            let r = a.norm();
            // Exact expansion of one factor, truncated at `order`.
            let mut factor: Vec<Complex<T>> =
                vec![Complex::new(T::zero(), T::zero()); order + 1];
            factor[0] = a;
            let scale = Complex::new(r * r - one, T::zero());
            let mut pw = Complex::new(one, T::zero());
            for c in factor.iter_mut().skip(1) {
                *c = pw * scale;
                pw *= a.conj();
            }
            // ℓ¹ data for the certificate.
            let factor_l1 = r + (one + r) * (one - pw.norm());
            let factor_tail = (one + r) * pw.norm(); // Σ_{k>order} r^{k-1}(1-r²)
            let acc_l1: T = acc.iter().map(|c| c.norm()).sum();

            let mut next: Vec<Complex<T>> =
                vec![Complex::new(T::zero(), T::zero()); 2 * order + 1];
            for (i, &x) in acc.iter().enumerate() {
                if x.norm() == T::zero() {
                    continue;
                }
                for (j, &y) in factor.iter().enumerate() {
                    next[i + j] += x * y;
                }
            }
            let dropped: T = next[order + 1..].iter().map(|c| c.norm()).sum();
            acc_tail = acc_tail * (factor_l1 + factor_tail) + acc_l1 * factor_tail + dropped;
            next.truncate(order + 1);
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > T::zero())
            .map(|(k, c)| (k as i64, c))
            .collect();
        Ok(TrigSymbol::from_parts(coeffs, acc_tail))
    }

    /// Smallest order whose geometric tail certificate reaches `tol`
    /// (conservative; used to size expansions before building them).
    pub fn required_order(&self, tol: T) -> usize {
        let r = self.max_modulus();
        if r == T::zero() {
            return self.degree();
        }
        // d·(1+r)·r^M ≤ tol, solved for M with slack.
        let d = real::<T>(self.degree() as f64);
        let target = tol / (d * (T::one() + r) * real::<T>(4.0));
        let m = (target.ln() / r.ln()).ceil();
        let m = m.to_f64().unwrap_or(f64::MAX).max(1.0) as usize;
        m.max(self.degree())
    }
}

/// Exact symbol from `(index, coefficient)` pairs.
pub fn trig_from_coeffs<T: Real>(entries: &[(i64, Complex<T>)]) -> Result<TrigSymbol<T>> {
    TrigSymbol::from_coeffs(entries.iter().copied())
}

/// Taylor expansion of a Blaschke product; see [`BlaschkeSpec::symbol`].
pub fn blaschke_symbol<T: Real>(spec: &BlaschkeSpec<T>, order: usize) -> Result<TrigSymbol<T>> {
    spec.symbol(order)
}

/// Coefficient convolution of two symbols.
pub fn symbol_mul<T: Real>(a: &TrigSymbol<T>, b: &TrigSymbol<T>) -> TrigSymbol<T> {
    a.mul(b)
}

/// Conjugate-reflection `φ ↦ φ̄` on the circle.
pub fn symbol_conj_reflect<T: Real>(a: &TrigSymbol<T>) -> TrigSymbol<T> {
    a.conj_reflect()
}

/// Rotation `φ ↦ z^n φ`.
pub fn symbol_rotate<T: Real>(a: &TrigSymbol<T>, n: i64) -> TrigSymbol<T> {
    a.rotate(n)
}

/// Grid sup-norm; see [`TrigSymbol::sup_norm_grid`].
pub fn sup_norm_grid<T: Real>(a: &TrigSymbol<T>, grid_size: usize) -> Result<T> {
    a.sup_norm_grid(grid_size)
}

// --- serialization -------------------------------------------------------
//
// Wire format: {"coeffs": [[k, re, im], ...], "tail_bound": x}
// BlaschkeSpec: {"zeros": [[re, im], ...]}

impl<T: Real + Serialize> Serialize for TrigSymbol<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a, T> {
            coeffs: Vec<(i64, &'a T, &'a T)>,
            tail_bound: &'a T,
        }
        let coeffs = self.coeffs.iter().map(|(k, c)| (*k, &c.re, &c.im)).collect();
        Wire {
            coeffs,
            tail_bound: &self.tail_bound,
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for TrigSymbol<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire<T> {
            coeffs: Vec<(i64, T, T)>,
            #[serde(default)]
            tail_bound: Option<T>,
        }
        let wire = Wire::<T>::deserialize(deserializer)?;
        let mut sym = TrigSymbol::from_coeffs(
            wire.coeffs
                .into_iter()
                .map(|(k, re, im)| (k, Complex::new(re, im))),
        )
        .map_err(D::Error::custom)?;
        if let Some(tb) = wire.tail_bound {
            if !(tb >= T::zero()) {
                return Err(D::Error::custom("tail_bound must be nonnegative"));
            }
            sym.tail_bound = tb;
        }
        Ok(sym)
    }
}

impl<T: Real + Serialize> Serialize for BlaschkeSpec<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a, T> {
            zeros: Vec<(&'a T, &'a T)>,
        }
        Wire {
            zeros: self.zeros.iter().map(|a| (&a.re, &a.im)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for BlaschkeSpec<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire<T> {
            zeros: Vec<(T, T)>,
        }
        let wire = Wire::<T>::deserialize(deserializer)?;
        BlaschkeSpec::new(wire.zeros.into_iter().map(|(re, im)| Complex::new(re, im)))
            .map_err(D::Error::custom)
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
    fn trig_from_coeffs_stores_exactly() {
        let phi = trig_from_coeffs(&[(0, c(0.5, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        assert_eq!(phi.coeff(0), c(0.5, 0.0));
        assert_eq!(phi.coeff(1), c(1.0, 0.0));
        assert_eq!(phi.coeff(-1), c(0.0, 0.0));
        assert_eq!(phi.tail_bound(), 0.0);
    }

    #[test]
    fn trig_from_coeffs_two_sided_and_empty() {
        let cosine = trig_from_coeffs(&[(-1, c(1.0, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        assert_eq!(cosine.coeff(-1), c(1.0, 0.0));
        assert_eq!(cosine.coeff(1), c(1.0, 0.0));
        let zero = trig_from_coeffs::<f64>(&[]).unwrap();
        assert_eq!(zero.support_min(), None);
        assert_eq!(zero.sup_norm_grid(16).unwrap(), 0.0);
    }

    #[test]
    fn trig_from_coeffs_rejects_bad_input() {
        assert!(matches!(
            trig_from_coeffs(&[(0, c(f64::NAN, 0.0))]),
            Err(Error::NonFiniteCoefficient { index: 0 })
        ));
        assert!(matches!(
            trig_from_coeffs(&[(2, c(1.0, 0.0)), (2, c(3.0, 0.0))]),
            Err(Error::DuplicateIndex { index: 2 })
        ));
    }

    #[test]
    fn blaschke_single_zero_at_origin() {
        let spec = BlaschkeSpec::new([c(0.0, 0.0)]).unwrap();
        let theta = spec.symbol(1).unwrap();
        assert_eq!(theta.coeff(1), c(-1.0, 0.0));
        assert_eq!(theta.coeff(0), c(0.0, 0.0));
    }

    #[test]
    fn blaschke_half_expansion() {
        // (0.5 - z)/(1 - 0.5 z) = 0.5 - 0.75 z - 0.375 z² - ...
        let spec = BlaschkeSpec::new([c(0.5, 0.0)]).unwrap();
        let theta = spec.symbol(2).unwrap();
        assert!((theta.coeff(0) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((theta.coeff(1) - c(-0.75, 0.0)).norm() < 1e-15);
        assert!((theta.coeff(2) - c(-0.375, 0.0)).norm() < 1e-15);
        // Cross-check by grid evaluation against the exact product form.
        let long = spec.symbol(128).unwrap();
        for m in 0..32 {
            let t = 2.0 * std::f64::consts::PI * (m as f64) / 32.0;
            let z = c(t.cos(), t.sin());
            assert!((long.eval(z) - spec.eval(z)).norm() < 1e-12);
        }
    }

    #[test]
    fn blaschke_double_zero_is_z_squared() {
        let spec = BlaschkeSpec::new([c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let theta = spec.symbol(2).unwrap();
        // (−z)·(−z) = z²
        assert_eq!(theta.coeff(2), c(1.0, 0.0));
        assert_eq!(theta.coeff(0), c(0.0, 0.0));
        assert_eq!(theta.coeff(1), c(0.0, 0.0));
    }

    #[test]
    fn blaschke_rejects_zero_outside_disk() {
        assert!(BlaschkeSpec::new([c(1.0, 0.0)]).is_err());
        assert!(BlaschkeSpec::new([c(0.8, 0.8)]).is_err());
    }

    #[test]
    fn blaschke_tail_bound_certifies_truncation() {
        let spec = BlaschkeSpec::new([c(0.6, 0.2), c(-0.5, 0.4), c(0.3, 0.0)]).unwrap();
        let order = 64;
        let sym = spec.symbol(order).unwrap();
        let exact = spec.symbol(512).unwrap();
        let mut dropped = 0.0f64;
        for (k, c) in exact.iter() {
            dropped += (c - sym.coeff(k)).norm();
        }
        assert!(
            dropped <= sym.tail_bound() + exact.tail_bound() + 1e-14,
            "dropped {dropped} > certified {}",
            sym.tail_bound()
        );
    }

    #[test]
    fn mul_of_cosines() {
        let cosine = trig_from_coeffs(&[(-1, c(1.0, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        let sq = symbol_mul(&cosine, &cosine);
        assert_eq!(sq.coeff(-2), c(1.0, 0.0));
        assert_eq!(sq.coeff(0), c(2.0, 0.0));
        assert_eq!(sq.coeff(2), c(1.0, 0.0));
    }

    #[test]
    fn mul_identity_and_annihilation() {
        let phi = trig_from_coeffs(&[(-2, c(0.0, 1.0)), (3, c(2.0, -1.0))]).unwrap();
        let one = TrigSymbol::constant(c(1.0, 0.0));
        assert_eq!(symbol_mul(&phi, &one), phi);
        let z = TrigSymbol::monomial(1);
        let zbar = TrigSymbol::monomial(-1);
        let prod = symbol_mul(&z, &zbar);
        assert_eq!(prod.coeff(0), c(1.0, 0.0));
        assert_eq!(prod.span(), 0);
    }

    #[test]
    fn conj_reflect_examples() {
        let z = TrigSymbol::<f64>::monomial(1);
        assert_eq!(z.conj_reflect(), TrigSymbol::monomial(-1));
        let phi = trig_from_coeffs(&[(0, c(0.5, 0.0)), (1, c(-0.75, 0.0))]).unwrap();
        let refl = phi.conj_reflect();
        assert_eq!(refl.coeff(0), c(0.5, 0.0));
        assert_eq!(refl.coeff(-1), c(-0.75, 0.0));
        let i_sym = trig_from_coeffs(&[(1, c(0.0, 1.0))]).unwrap();
        assert_eq!(i_sym.conj_reflect().coeff(-1), c(0.0, -1.0));
    }

    #[test]
    fn conj_reflect_is_involution() {
        let phi = trig_from_coeffs(&[(-3, c(1.0, 2.0)), (0, c(0.5, 0.0)), (2, c(0.0, -1.0))])
            .unwrap();
        assert_eq!(phi.conj_reflect().conj_reflect(), phi);
    }

    #[test]
    fn rotate_examples() {
        let zbar = TrigSymbol::<f64>::monomial(-1);
        assert_eq!(zbar.rotate(1), TrigSymbol::constant(c(1.0, 0.0)));
        let zbar2 = TrigSymbol::<f64>::monomial(-2);
        assert_eq!(zbar2.rotate(1), TrigSymbol::monomial(-1));
        let phi = trig_from_coeffs(&[(0, c(0.5, 0.0)), (5, c(1.0, 1.0))]).unwrap();
        assert_eq!(phi.rotate(0), phi);
    }

    #[test]
    fn sup_norm_examples() {
        let phi = trig_from_coeffs(&[(0, c(0.5, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        let sup = phi.sup_norm_grid(8192).unwrap();
        assert!((sup - 1.5).abs() < 1e-12, "sup {sup}");

        let theta = BlaschkeSpec::new([c(0.5, 0.0)]).unwrap().symbol(256).unwrap();
        let sup = theta.sup_norm_grid(8192).unwrap();
        assert!((sup - 1.0).abs() < 1e-10, "inner sup {sup}");
    }

    #[test]
    fn sup_norm_grid_too_small() {
        let phi = trig_from_coeffs(&[(-8, c(1.0, 0.0)), (8, c(1.0, 0.0))]).unwrap();
        assert!(matches!(
            phi.sup_norm_grid(16),
            Err(Error::GridTooSmall { .. })
        ));
    }

    #[test]
    fn rotation_is_grid_isometry() {
        let phi = trig_from_coeffs(&[(-2, c(0.3, 0.4)), (0, c(0.5, 0.0)), (1, c(1.0, -0.2))])
            .unwrap();
        let a = phi.sup_norm_grid(1024).unwrap();
        let b = phi.rotate(7).sup_norm_grid(1024).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn serialization_round_trip() {
        let phi = trig_from_coeffs(&[(-1, c(0.25, -1.0)), (2, c(3.0, 0.5))]).unwrap();
        let json = serde_json::to_string(&phi).unwrap();
        assert_eq!(json, r#"{"coeffs":[[-1,0.25,-1.0],[2,3.0,0.5]],"tail_bound":0.0}"#);
        let back: TrigSymbol<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, phi);

        let spec = BlaschkeSpec::new([c(0.5, 0.0), c(-0.25, 0.1)]).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"zeros":[[0.5,0.0],[-0.25,0.1]]}"#);
        let back: BlaschkeSpec<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn generic_scalar_compiles_for_f32() {
        let phi = trig_from_coeffs::<f32>(&[(0, Complex::new(0.5, 0.0)), (1, Complex::new(1.0, 0.0))])
            .unwrap();
        let sup = phi.sup_norm_grid(256).unwrap();
        assert!((sup - 1.5).abs() < 1e-4);
    }
}
