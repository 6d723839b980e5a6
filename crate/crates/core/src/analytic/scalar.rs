use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::harmonic::{harmonic, harmonic_f64};

/// Number type the analytic routines run in.
pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(value: &BigRational) -> Self;
    fn from_int(value: i128) -> Self;
    /// Exact for rationals (the float's binary value), identity for `f64`.
    fn from_f64(value: f64) -> Self;
    /// The `n`th harmonic number.
    fn harmonic(n: usize) -> Self;
    fn to_f64(&self) -> f64;

    fn zero() -> Self {
        Self::from_int(0)
    }
}

impl Scalar for f64 {
    fn from_rational(value: &BigRational) -> Self {
        ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
    }

    fn from_int(value: i128) -> Self {
        value as f64
    }

    fn from_f64(value: f64) -> Self {
        value
    }

    fn harmonic(n: usize) -> Self {
        harmonic_f64(n)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for BigRational {
    fn from_rational(value: &BigRational) -> Self {
        value.clone()
    }

    fn from_int(value: i128) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_f64(value: f64) -> Self {
        BigRational::from_float(value).unwrap_or_default()
    }

    fn harmonic(n: usize) -> Self {
        harmonic(n)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// `numer / denom` as an exact rational.
///
/// # Panics
/// If `denom` is 0.
pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}
