//! Scalar abstractions.
//!
//! Walk and spectral code is written against [`Real`] so it runs in `f32` or
//! `f64`; exact chain algebra is written against [`Coefficient`], which covers
//! machine integers and rationals.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Signed};

/// Floating-point scalar for amplitudes, probabilities and spectra.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Converts a count or index without a fallible round trip.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in floating point")
    }

    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64")
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
}

/// [`Real`] scalars that nalgebra's dense eigensolvers accept (`f32`, `f64`).
///
/// Both supertraits define `abs`, `sqrt` and friends, so generic code under
/// this bound calls them as `Float::abs(x)`.
pub trait LinalgReal: Real + nalgebra::RealField {}

impl<T> LinalgReal for T where T: Real + nalgebra::RealField {}

/// Chain coefficient ring: anything signed with exact arithmetic semantics
/// (`i64`, `Ratio<i64>`, ...).
pub trait Coefficient: Signed + Clone + Debug + PartialEq {}

impl<T> Coefficient for T where T: Signed + Clone + Debug + PartialEq {}

/// `e^{i·2π·num/den}` evaluated from the exact reduced angle. Quarter turns
/// are returned exactly.
pub(crate) fn root_of_unity<T: Real>(num: usize, den: usize) -> Complex<T> {
    let k = num % den;
    if (4 * k).is_multiple_of(den) {
        let (one, zero) = (T::one(), T::zero());
        return match 4 * k / den {
            0 => Complex::new(one, zero),
            1 => Complex::new(zero, one),
            2 => Complex::new(-one, zero),
            _ => Complex::new(zero, -one),
        };
    }
    let angle = T::TAU() * T::from_count(k) / T::from_count(den);
    Complex::from_polar(T::one(), angle)
}
