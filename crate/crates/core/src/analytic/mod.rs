//! Exact and asymptotic expected costs.
//!
//! Everything is driven by the dual-pivot recurrence
//! `E[C_n] = toll(n) + 6/(n(n-1)) * sum_{k=0}^{n-2} (n-k-1) E[C_k]` for `n > M`
//! with base values `E[C_n]` for `n <= M`. [`solve_recurrence`] is the
//! reference; closed forms and the published formulas are checked against it.
//!
//! Numeric code is generic over [`Scalar`], implemented for `f64` and for
//! exact [`BigRational`](num_rational::BigRational).

mod closed_form;
mod cutoff;
mod expectations;
mod formula;
mod harmonic;
mod insertion;
mod recurrence;
mod scalar;
mod toll;

pub use closed_form::{bootstrap_values, closed_form, closed_form_leading, remainder_coefficient, ClosedFormSolution};
pub use cutoff::{linear_coefficient, optimal_cutoff};
pub use expectations::{expected_cost, expected_frequency, EvalMode, ExpectationTable, Quantity};
pub use formula::{asymptotic_expansion, cost_formula, frequency_formula, AsymptoticExpansion, HarmonicShape, LeadingFormula};
pub use harmonic::{harmonic, harmonic_asymptotic, harmonic_f64};
pub use insertion::{insertionsort_frequencies, per_call_insertion, InsertionFrequencies};
pub use recurrence::solve_recurrence;
pub use scalar::{rational, Scalar};
pub use toll::{measure_weights, folded_bytecode_toll, BaseCost, LinearToll};

pub use crate::costmodel::{Frequency, Measure};

use thiserror::Error;

/// Euler's constant to 30 digits.
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticError {
    #[error("cutoff M must be at least 1")]
    InvalidCutoff,
    #[error("n = {n} is outside the closed-form range n >= {min} for M = {cutoff}; use the recurrence")]
    OutOfPublishedRange { n: usize, min: usize, cutoff: usize },
    #[error("toll value {special} at n = 2 is neither 0 nor 2a+b = {regular}; no closed form for M = 1")]
    TollShapeMismatch { special: String, regular: String },
}
