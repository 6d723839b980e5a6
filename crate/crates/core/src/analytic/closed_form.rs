use num_rational::BigRational;

use super::formula::LeadingFormula;
use super::toll::LinearToll;
use super::{harmonic, rational, AnalyticError, Scalar, EULER_GAMMA};

/// `E[C_{M+2}]` and `E[C_{M+3}]`, taken from the recurrence.
pub fn bootstrap_values<T: Scalar>(toll: &LinearToll, cutoff: usize) -> (T, T) {
    let mut values = toll.solve::<T>(cutoff, cutoff + 3);
    let last = values.pop().expect("recurrence returns M+4 values");
    let second = values.pop().expect("recurrence returns M+4 values");
    (second, last)
}

/// Coefficient of `binom(M+4,5)/binom(n,4)` in the exact solution.
pub fn remainder_coefficient<T: Scalar>(toll: &LinearToll, cutoff: usize, bootstrap: (T, T)) -> T {
    let m = cutoff as i64;
    let (a, b) = (&toll.a, &toll.b);
    let linear_part = a * rational(6, 5) + (a - b) * rational(2, m + 3) + (b * rational(5, 1) - a * rational(17, 1)) * rational(1, 2 * (m + 4));
    let (at_m2, at_m3) = bootstrap;
    T::from_rational(&linear_part) - T::from_rational(&rational(m - 1, m + 4)) * at_m3
        + T::from_rational(&rational(m - 1, m + 3)) * at_m2
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i as i128 + 1))
}

fn check_range(cutoff: usize, n: usize) -> Result<(), AnalyticError> {
    if cutoff == 0 {
        return Err(AnalyticError::InvalidCutoff);
    }
    if n < cutoff + 3 {
        return Err(AnalyticError::OutOfPublishedRange { n, min: cutoff + 3, cutoff });
    }
    Ok(())
}

/// Exact solution of the recurrence for a linear toll, for `n >= M+3`.
///
/// `bootstrap` holds `E[C_{M+2}]` and `E[C_{M+3}]` (see [`bootstrap_values`]);
/// they only matter for `M >= 2`.
pub fn closed_form<T: Scalar>(toll: &LinearToll, cutoff: usize, bootstrap: (T, T), n: usize) -> Result<T, AnalyticError> {
    check_range(cutoff, n)?;
    let leading = LeadingFormula::from_toll(toll, cutoff)?.eval::<T>(n);
    let remainder = remainder_coefficient(toll, cutoff, bootstrap);
    let ratio = T::from_int(binomial(cutoff + 4, 5)) / T::from_int(binomial(n, 4));
    Ok(leading + ratio * remainder)
}

/// [`closed_form`] without the remainder term.
pub fn closed_form_leading<T: Scalar>(toll: &LinearToll, cutoff: usize, n: usize) -> Result<T, AnalyticError> {
    check_range(cutoff, n)?;
    Ok(LeadingFormula::from_toll(toll, cutoff)?.eval(n))
}

/// Closed-form solution of the recurrence for one linear toll and cutoff.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormSolution {
    pub a: BigRational,
    pub b: BigRational,
    pub cutoff: usize,
    pub bootstrap: (BigRational, BigRational),
    /// Coefficient of `binom(M+4,5)/binom(n,4)`.
    pub remainder: BigRational,
    /// Constant `W` of the large-`n` expansion, which ignores base values:
    /// `E[C_n] = 6/5 a n ln n + (19/25 a + W) n + 6/5 a ln n + (153/50 a - b/2 + W) + O(1/n)`.
    pub asymptotic_constant: f64,
    leading: LeadingFormula,
}

impl ClosedFormSolution {
    pub fn new(toll: &LinearToll, cutoff: usize) -> Result<Self, AnalyticError> {
        let leading = LeadingFormula::from_toll(toll, cutoff)?;
        let bootstrap: (BigRational, BigRational) = bootstrap_values(toll, cutoff);
        let remainder = remainder_coefficient(toll, cutoff, bootstrap.clone());
        let m = cutoff as i64;
        let (a, b) = (&toll.a, &toll.b);
        let mut w = (b - a) * rational(6, 5 * (m + 2)) - a * harmonic(cutoff + 2) * rational(6, 5);
        if cutoff == 1 && toll.special_n2 != toll.regular_n2() {
            w -= toll.regular_n2() * rational(1, 10);
        }
        let asymptotic_constant = 1.2 * f64::from_rational(a) * EULER_GAMMA + f64::from_rational(&w);
        Ok(ClosedFormSolution {
            a: a.clone(),
            b: b.clone(),
            cutoff,
            bootstrap,
            remainder,
            asymptotic_constant,
            leading,
        })
    }

    pub fn eval<T: Scalar>(&self, n: usize) -> Result<T, AnalyticError> {
        check_range(self.cutoff, n)?;
        let ratio = T::from_int(binomial(self.cutoff + 4, 5)) / T::from_int(binomial(n, 4));
        Ok(self.leading.eval::<T>(n) + ratio * T::from_rational(&self.remainder))
    }
}
