//! Real scalar abstraction.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign};

/// Real floating-point scalar the library is generic over.
pub trait Real: Float + FloatConst + NumAssign + Debug + Display + Default + Send + Sync + 'static {
    /// Lossy conversion from `f64`; used for tolerances and literals.
    fn of(x: f64) -> Self;

    /// Conversion to `f64` for reporting and serialization.
    fn as_f64(self) -> f64;

    fn of_usize(n: usize) -> Self {
        Self::of(n as f64)
    }
}

impl Real for f64 {
    #[inline]
    fn of(x: f64) -> Self {
        x
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    #[inline]
    fn of(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self as f64
    }
}

/// `true` when both parts are finite.
#[inline]
pub(crate) fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

#[inline]
pub(crate) fn cplx<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}
