use num_rational::BigRational;
use num_traits::Zero;

use super::harmonic::harmonic;
use super::toll::LinearToll;
use super::{rational, AnalyticError, Frequency, Measure, Scalar, EULER_GAMMA};

/// How the `n log n` part of an expectation is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarmonicShape {
    /// `c*(n+1)*H_n + linear*n + constant`
    Plain,
    /// `c*(n+1)*(H_{n+1} - H_offset) + linear*(n+1) + constant`
    Shifted { offset: usize },
}

/// An expectation written through harmonic numbers, exact from `min_n` on
/// up to a remainder that decays like `n^-4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingFormula {
    pub harmonic: BigRational,
    pub shape: HarmonicShape,
    pub linear: BigRational,
    pub constant: BigRational,
    /// Smallest `n` the formula is stated for.
    pub min_n: usize,
}

/// `c n ln n + d n + e ln n + f`, dropping `O(1/n)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticExpansion {
    pub n_ln_n: f64,
    pub n: f64,
    pub ln_n: f64,
    pub constant: f64,
}

impl AsymptoticExpansion {
    pub fn eval(&self, n: usize) -> f64 {
        if n == 0 {
            return self.constant;
        }
        let x = n as f64;
        self.n_ln_n * x * x.ln() + self.n * x + self.ln_n * x.ln() + self.constant
    }
}

impl LeadingFormula {
    /// Solution of the recurrence for a linear toll, without the
    /// `binom(M+4,5)/binom(n,4)` remainder.
    ///
    /// For `M = 1` the toll value at `n = 2` must be `0` or `2a+b`.
    pub fn from_toll(toll: &LinearToll, cutoff: usize) -> Result<Self, AnalyticError> {
        if cutoff == 0 {
            return Err(AnalyticError::InvalidCutoff);
        }
        let m = cutoff as i64;
        let (a, b) = (&toll.a, &toll.b);
        let mut linear = (a * rational(19, 5) + (b - a) * rational(6, m + 2)) * rational(1, 5);
        let weight_total = rational(((m + 2) * (m + 1) * m / 6).max(1), 1);
        for k in 0..=cutoff {
            let base: BigRational = toll.base.at(k, cutoff);
            linear += base * rational(3 * m - 2 * k as i64, 1) / &weight_total * rational(1, 5);
        }
        if cutoff == 1 {
            let regular = toll.regular_n2();
            if toll.special_n2 != regular {
                if !toll.special_n2.is_zero() {
                    return Err(AnalyticError::TollShapeMismatch {
                        special: toll.special_n2.to_string(),
                        regular: regular.to_string(),
                    });
                }
                linear -= regular * rational(1, 10);
            }
        }
        Ok(LeadingFormula {
            harmonic: a * rational(6, 5),
            shape: HarmonicShape::Shifted { offset: cutoff + 2 },
            linear,
            constant: (a - b) * rational(1, 2),
            min_n: cutoff + 3,
        })
    }

    pub fn eval<T: Scalar>(&self, n: usize) -> T {
        let c = T::from_rational(&self.harmonic);
        let n1 = T::from_int(n as i128 + 1);
        let linear = T::from_rational(&self.linear);
        let constant = T::from_rational(&self.constant);
        match self.shape {
            HarmonicShape::Plain => c * n1 * T::harmonic(n) + linear * T::from_int(n as i128) + constant,
            HarmonicShape::Shifted { offset } => {
                c * n1.clone() * (T::harmonic(n + 1) - T::harmonic(offset)) + linear * n1 + constant
            }
        }
    }

    /// Coefficient of the linear term once all harmonic numbers of `n` are
    /// split off, i.e. with `H_n` itself contributing nothing.
    pub fn linear_coefficient(&self) -> BigRational {
        match self.shape {
            HarmonicShape::Plain => self.linear.clone(),
            HarmonicShape::Shifted { offset } => &self.linear - &self.harmonic * harmonic(offset),
        }
    }

    pub fn expansion(&self) -> AsymptoticExpansion {
        let c = f64::from_rational(&self.harmonic);
        let lin = f64::from_rational(&self.linear_coefficient());
        let constant = f64::from_rational(&self.constant);
        // (n+1) H_n     = n ln n + gamma n + ln n + gamma + 1/2 + O(1/n)
        // (n+1) H_{n+1} = n ln n + gamma n + ln n + gamma + 3/2 + O(1/n)
        let (offset_half, shift) = match self.shape {
            HarmonicShape::Plain => (0.5, 0.0),
            HarmonicShape::Shifted { .. } => (1.5, lin),
        };
        AsymptoticExpansion {
            n_ln_n: c,
            n: c * EULER_GAMMA + lin,
            ln_n: c,
            constant: c * EULER_GAMMA + c * offset_half + shift + constant,
        }
    }
}

/// Closed forms for the four cost measures.
///
/// With `M = 1` these are exact for `n >= 4`. With `M >= 2` they are exact up
/// to an `O(n^-4)` remainder; see [`super::closed_form`] for the exact value.
pub fn cost_formula(measure: Measure, cutoff: usize) -> Result<LeadingFormula, AnalyticError> {
    let r = rational;
    match cutoff {
        0 => Err(AnalyticError::InvalidCutoff),
        1 => {
            let (c, linear, constant) = match measure {
                Measure::Comparisons => (r(19, 10), r(-711, 200), r(-31, 200)),
                Measure::Swaps => (r(3, 5), r(-47, 100), r(-61, 300)),
                Measure::Writes => (r(11, 10), r(-139, 200), r(-257, 600)),
                Measure::Bytecodes => (r(217, 10), r(-1993, 200), r(-2009, 600)),
            };
            Ok(LeadingFormula { harmonic: c, shape: HarmonicShape::Plain, linear, constant, min_n: 4 })
        }
        _ => {
            let m = cutoff as i64;
            let h = harmonic(cutoff + 1);
            let (c, linear, constant) = match measure {
                Measure::Comparisons => (
                    r(19, 10),
                    r(124, 75) + r(3 * m, 20) - r(9, 5 * (m + 2)) - r(12, 5 * (m + 2)) * h,
                    r(3, 2),
                ),
                Measure::Swaps => (r(3, 5), r(19, 50) + r(4, 5 * (m + 2)), r(-1, 3)),
                Measure::Writes => (
                    r(11, 10),
                    r(86, 75) + r(3 * m, 20) + r(18, 5 * (m + 1)) - r(26, 5 * (m + 2)),
                    r(-5, 6),
                ),
                Measure::Bytecodes => (
                    r(217, 10),
                    r(4259, 150) + r(51 * m, 20) + r(72, m + 1) - r(317, 5 * (m + 2)) - r(48, 5 * (m + 2)) * h,
                    r(-181, 12),
                ),
            };
            Ok(LeadingFormula {
                harmonic: c,
                shape: HarmonicShape::Shifted { offset: cutoff + 2 },
                linear,
                constant,
                min_n: cutoff + 3,
            })
        }
    }
}

/// Closed form of a single frequency's expectation.
pub fn frequency_formula(which: Frequency, cutoff: usize) -> Result<LeadingFormula, AnalyticError> {
    LeadingFormula::from_toll(&LinearToll::for_frequency(which), cutoff)
}

/// Large-`n` expansion of the expected cost.
///
/// # Panics
/// If `cutoff` is 0.
pub fn asymptotic_expansion(measure: Measure, cutoff: usize) -> AsymptoticExpansion {
    cost_formula(measure, cutoff).expect("cutoff must be at least 1").expansion()
}
