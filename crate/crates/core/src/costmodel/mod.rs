//! Linear cost model: block frequencies to block counts, and block counts to
//! comparisons, swaps, array writes and bytecode instructions.

mod costs;
mod frequency;
mod verify;
mod weights;

pub use costs::{derive_costs, derive_costs_with, weighted_block_sum, CostVector, Measure};
pub use frequency::{block_counts, Frequency, FrequencyVector};
pub use verify::{verify_step, StepIdentity, StepViolation};
pub use weights::{WeightTable, WeightTableError};

use thiserror::Error;

/// Rejection of a frequency vector that no run can produce.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("frequency vector violates flow conservation: {lhs} < {rhs} for block {block}")]
pub struct FlowViolation {
    /// Block whose count would be negative (Quicksort blocks 1..=20, then
    /// Insertionsort blocks as `i1..=i8`).
    pub block: String,
    pub lhs: String,
    pub rhs: String,
}
