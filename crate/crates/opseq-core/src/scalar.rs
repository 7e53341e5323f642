//! Real scalar abstraction: every numeric routine in this crate is generic
//! over the underlying floating-point type.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar: f32 or f64.
///
/// Complex quantities throughout the crate are `Complex<T>` with `T: Real`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Convert an f64 literal into the working scalar type.
///
/// Panics only if the target type cannot represent any f64 at all, which
/// cannot happen for f32/f64.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant must convert into the scalar type")
}

/// Convert an f64 literal into a complex constant with zero imaginary part.
#[inline]
pub fn creal<T: Real>(x: f64) -> Complex<T> {
    Complex::new(real(x), T::zero())
}

/// Complex number from f64 parts.
#[inline]
pub fn cplx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(real(re), real(im))
}
