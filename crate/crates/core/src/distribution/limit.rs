use std::f64::consts::PI;

use super::quadrature::{simplex_expectation, DEFAULT_TOLERANCE};
use super::{DistributionError, QuadratureError};
use crate::Measure;

/// `x ln x`, extended continuously by `0` at `x = 0`.
pub fn x_ln_x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Lengths of the three pieces two points cut from the unit interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spacings {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl Spacings {
    pub fn new(d1: f64, d2: f64, d3: f64) -> Result<Self, DistributionError> {
        let valid = [d1, d2, d3].iter().all(|d| (0.0..=1.0).contains(d)) && (d1 + d2 + d3 - 1.0).abs() <= 1e-12;
        if !valid {
            return Err(DistributionError::NotOnSimplex(d1, d2, d3));
        }
        Ok(Spacings { d1, d2, d3 })
    }

    /// Spacings of two independent uniforms `u` and `v`.
    pub fn from_uniforms(u: f64, v: f64) -> Self {
        let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
        Spacings { d1: lo, d2: hi - lo, d3: 1.0 - hi }
    }

    pub fn entropy_term(&self) -> f64 {
        x_ln_x(self.d1) + x_ln_x(self.d2) + x_ln_x(self.d3)
    }
}

/// Additive term `b(D)` of a measure's limit fixed-point equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixPointCoefficient {
    measure: Measure,
}

impl FixPointCoefficient {
    /// `None` for write accesses, whose limit law is not covered.
    pub fn new(measure: Measure) -> Option<Self> {
        (measure != Measure::Writes).then_some(FixPointCoefficient { measure })
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }

    pub fn eval(&self, d: &Spacings) -> f64 {
        let (d1, d2, d3) = (d.d1, d.d2, d.d3);
        let entropy = d.entropy_term();
        match self.measure {
            Measure::Comparisons => 1.0 + (d1 + d2) * (d2 + 2.0 * d3) + 1.9 * entropy,
            Measure::Swaps => d1 + (d1 + d2) * d3 + 0.6 * entropy,
            Measure::Bytecodes => 24.0 + (d3 - 9.0) * d2 - 2.0 * d3 * (5.0 * d3 + 2.0) + 21.7 * entropy,
            Measure::Writes => unreachable!("no coefficient is constructed for writes"),
        }
    }
}

/// Variances and covariance of the limit laws, in units of `n^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitConstants {
    pub sigma2_cmps: f64,
    pub sigma2_swaps: f64,
    pub sigma2_bytecodes: f64,
    pub cov_cmps_swaps: f64,
    pub correlation: f64,
}

impl LimitConstants {
    /// Exact values in terms of `pi^2`.
    pub fn closed_form() -> Self {
        let pi2 = PI * PI;
        Self::from_moments(
            2231.0 / 360.0 - 361.0 / 600.0 * pi2,
            7.0 / 10.0 - 3.0 / 50.0 * pi2,
            1_469_983.0 / 1800.0 - 47_089.0 / 600.0 * pi2,
            28.0 / 15.0 - 19.0 / 100.0 * pi2,
        )
    }

    /// The same constants by numerical integration over the simplex.
    pub fn by_quadrature() -> Result<Self, QuadratureError> {
        let variance = |m| variance_by_quadrature(m).map(|v| v.expect("measure has a limit law"));
        Ok(Self::from_moments(
            variance(Measure::Comparisons)?,
            variance(Measure::Swaps)?,
            variance(Measure::Bytecodes)?,
            covariance_by_quadrature()?,
        ))
    }

    fn from_moments(cmps: f64, swaps: f64, bytecodes: f64, cov: f64) -> Self {
        LimitConstants {
            sigma2_cmps: cmps,
            sigma2_swaps: swaps,
            sigma2_bytecodes: bytecodes,
            cov_cmps_swaps: cov,
            correlation: cov / (cmps.sqrt() * swaps.sqrt()),
        }
    }

    pub fn variance(&self, measure: Measure) -> Option<f64> {
        match measure {
            Measure::Comparisons => Some(self.sigma2_cmps),
            Measure::Swaps => Some(self.sigma2_swaps),
            Measure::Bytecodes => Some(self.sigma2_bytecodes),
            Measure::Writes => None,
        }
    }
}

/// `2 E[b(D)^2]`, the limit variance (`None` for writes).
///
/// The factor 2 comes from `sum E[D_j^2] = 1/2`.
pub fn variance_by_quadrature(measure: Measure) -> Result<Option<f64>, QuadratureError> {
    let Some(b) = FixPointCoefficient::new(measure) else {
        return Ok(None);
    };
    let tolerance = if measure == Measure::Bytecodes { 1e-7 } else { DEFAULT_TOLERANCE * 1e-2 };
    let second = simplex_expectation(|d1, d2, d3| b.eval(&Spacings { d1, d2, d3 }).powi(2), tolerance)?;
    Ok(Some(2.0 * second))
}

/// `2 E[b_C(D) b_S(D)]`, the limit covariance of comparisons and swaps.
pub fn covariance_by_quadrature() -> Result<f64, QuadratureError> {
    let c = FixPointCoefficient { measure: Measure::Comparisons };
    let s = FixPointCoefficient { measure: Measure::Swaps };
    let product = simplex_expectation(
        |d1, d2, d3| {
            let d = Spacings { d1, d2, d3 };
            c.eval(&d) * s.eval(&d)
        },
        DEFAULT_TOLERANCE * 1e-2,
    )?;
    Ok(2.0 * product)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        let k = LimitConstants::closed_form();
        assert!((k.sigma2_cmps - 0.259_010_240_9).abs() < 1e-9);
        assert!((k.sigma2_swaps - 0.107_823_735_9).abs() < 1e-9);
        assert!((k.sigma2_bytecodes - 42.074_219_484).abs() < 1e-6);
        assert!((k.cov_cmps_swaps + 0.008_558_169_5).abs() < 1e-9);
        assert!((k.correlation + 0.051_211_2).abs() < 1e-6);
    }

    #[test]
    fn spacings_validation() {
        assert!(Spacings::new(0.2, 0.3, 0.5).is_ok());
        assert!(Spacings::new(0.2, 0.3, 0.6).is_err());
        assert!(Spacings::new(-0.1, 0.6, 0.5).is_err());
        let d = Spacings::from_uniforms(0.7, 0.2);
        assert!((d.d1 - 0.2).abs() < 1e-15 && (d.d2 - 0.5).abs() < 1e-15 && (d.d3 - 0.3).abs() < 1e-15);
    }

    #[test]
    fn writes_have_no_coefficient() {
        assert!(FixPointCoefficient::new(Measure::Writes).is_none());
        assert_eq!(variance_by_quadrature(Measure::Writes).unwrap(), None);
    }

    #[test]
    fn x_ln_x_vanishes_at_zero() {
        assert_eq!(x_ln_x(0.0), 0.0);
        assert_eq!(x_ln_x(1.0), 0.0);
    }
}
