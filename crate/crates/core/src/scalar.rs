//! Floating-point abstraction for the numerical core.
//!
//! Everything that does math — operators, Hamiltonians, propagators,
//! metrics — is generic over [`RealScalar`], so the same code runs in
//! `f32` or `f64`. The crate root exports `f64` aliases, which is what
//! the preset catalog and the CLI use.

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign, NumCast};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

/// Real scalar underlying all matrices, amplitudes, and couplings.
pub trait RealScalar:
    Float + FloatConst + NumAssign + NumCast + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` constant (coupling values, tolerances).
    fn of(x: f64) -> Self {
        NumCast::from(x).expect("f64 constant not representable in scalar type")
    }
}

impl<T> RealScalar for T where
    T: Float
        + FloatConst
        + NumAssign
        + NumCast
        + Sum
        + Debug
        + Display
        + LowerExp
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for a complex number over the generic scalar.
pub fn cplx<F: RealScalar>(re: F, im: F) -> Complex<F> {
    Complex::new(re, im)
}

/// Complex zero.
pub fn czero<F: RealScalar>() -> Complex<F> {
    Complex::new(F::zero(), F::zero())
}

/// Complex one.
pub fn cone<F: RealScalar>() -> Complex<F> {
    Complex::new(F::one(), F::zero())
}
