use std::ops::RangeInclusive;

use num_rational::BigRational;

use super::formula::cost_formula;
use super::{Measure, Scalar};

fn exact_linear_coefficient(measure: Measure, cutoff: usize) -> BigRational {
    cost_formula(measure, cutoff).expect("cutoff must be at least 1").linear_coefficient()
}

/// Coefficient of the linear term of the expected cost under cutoff `M`,
/// with the `n ln n` part written through harmonic numbers of `n`.
///
/// # Panics
/// If `cutoff` is 0.
pub fn linear_coefficient(measure: Measure, cutoff: usize) -> f64 {
    exact_linear_coefficient(measure, cutoff).to_f64()
}

/// Cutoff in `range` with the smallest linear coefficient; ties go to the
/// smaller cutoff. Comparisons are exact.
///
/// # Panics
/// If `range` is empty or contains 0.
pub fn optimal_cutoff(measure: Measure, range: RangeInclusive<usize>) -> (usize, f64) {
    let (best, value) = range
        .map(|m| (m, exact_linear_coefficient(measure, m)))
        .reduce(|best, next| if next.1 < best.1 { next } else { best })
        .expect("cutoff range must not be empty");
    (best, value.to_f64())
}
