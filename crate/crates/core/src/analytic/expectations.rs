use std::fmt;

use super::closed_form::{bootstrap_values, closed_form, remainder_coefficient};
use super::formula::{cost_formula, frequency_formula, LeadingFormula};
use super::toll::LinearToll;
use super::{AnalyticError, Frequency, Measure, Scalar};

/// How an expectation is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvalMode {
    /// Solve the recurrence up to `n`. Always exact, any `n`.
    Recurrence,
    /// Closed form plus its small remainder term; exact for `n >= M+3`
    /// (`n >= 4` when `M = 1`).
    ClosedForm,
    /// `c n ln n + d n + e ln n + f`.
    Asymptotic,
}

/// What is being averaged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Cost(Measure),
    Frequency(Frequency),
}

impl Quantity {
    /// Toll and base values of the recurrence. Cost measures are assembled
    /// from the frequency tolls, which keeps every base value.
    pub fn toll(&self) -> LinearToll {
        match self {
            Quantity::Cost(m) => LinearToll::for_measure(*m),
            Quantity::Frequency(f) => LinearToll::for_frequency(*f),
        }
    }

    pub fn formula(&self, cutoff: usize) -> Result<LeadingFormula, AnalyticError> {
        match self {
            Quantity::Cost(m) => cost_formula(*m, cutoff),
            Quantity::Frequency(f) => frequency_formula(*f, cutoff),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Cost(m) => m.fmt(f),
            Quantity::Frequency(freq) => freq.fmt(f),
        }
    }
}

/// Expectations of one quantity under one cutoff and evaluation mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectationTable {
    pub quantity: Quantity,
    pub cutoff: usize,
    pub mode: EvalMode,
}

impl ExpectationTable {
    pub fn new(quantity: Quantity, cutoff: usize, mode: EvalMode) -> Self {
        ExpectationTable { quantity, cutoff, mode }
    }

    pub fn eval<T: Scalar>(&self, n: usize) -> Result<T, AnalyticError> {
        if self.cutoff == 0 {
            return Err(AnalyticError::InvalidCutoff);
        }
        match self.mode {
            EvalMode::Recurrence => {
                Ok(self.quantity.toll().solve::<T>(self.cutoff, n).pop().expect("recurrence returns n+1 values"))
            }
            EvalMode::Asymptotic => Ok(T::from_f64(self.quantity.formula(self.cutoff)?.expansion().eval(n))),
            EvalMode::ClosedForm => self.closed_form(n),
        }
    }

    /// Values for `n = 0..=n_max`. Only the recurrence covers every `n`.
    pub fn tabulate<T: Scalar>(&self, n_max: usize) -> Result<Vec<T>, AnalyticError> {
        match self.mode {
            EvalMode::Recurrence if self.cutoff >= 1 => Ok(self.quantity.toll().solve::<T>(self.cutoff, n_max)),
            _ => (0..=n_max).map(|n| self.eval(n)).collect(),
        }
    }

    fn closed_form<T: Scalar>(&self, n: usize) -> Result<T, AnalyticError> {
        let toll = self.quantity.toll();
        match self.quantity {
            Quantity::Frequency(_) => closed_form(&toll, self.cutoff, bootstrap_values(&toll, self.cutoff), n),
            Quantity::Cost(_) => {
                let formula = self.quantity.formula(self.cutoff)?;
                if n < formula.min_n {
                    return Err(AnalyticError::OutOfPublishedRange { n, min: formula.min_n, cutoff: self.cutoff });
                }
                let mut value = formula.eval::<T>(n);
                if self.cutoff >= 2 {
                    // The stated cost formulas drop the remainder; add it back.
                    let remainder = remainder_coefficient(&toll, self.cutoff, bootstrap_values(&toll, self.cutoff));
                    let m = self.cutoff as i128;
                    let numer = (m + 4) * (m + 3) * (m + 2) * (m + 1) * m / 120;
                    let nn = n as i128;
                    let denom = nn * (nn - 1) * (nn - 2) * (nn - 3) / 24;
                    value = value + T::from_int(numer) / T::from_int(denom) * remainder;
                }
                Ok(value)
            }
        }
    }
}

/// Expected cost of sorting a random permutation of size `n` with cutoff `M`.
pub fn expected_cost<T: Scalar>(measure: Measure, cutoff: usize, n: usize, mode: EvalMode) -> Result<T, AnalyticError> {
    ExpectationTable::new(Quantity::Cost(measure), cutoff, mode).eval(n)
}

/// Expected value of one block frequency.
pub fn expected_frequency<T: Scalar>(
    which: Frequency,
    cutoff: usize,
    n: usize,
    mode: EvalMode,
) -> Result<T, AnalyticError> {
    ExpectationTable::new(Quantity::Frequency(which), cutoff, mode).eval(n)
}
