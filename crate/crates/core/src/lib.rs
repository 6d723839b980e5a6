//! Instrumented dual-pivot Quicksort (Yaroslavskiy's partitioning) together with
//! the machinery to predict its costs exactly.
//!
//! * [`sortcore`] runs the sorter and records per-block execution counts.
//! * [`costmodel`] turns block frequencies into comparisons, swaps, writes and
//!   bytecode instructions.
//! * [`analytic`] solves the expected-cost recurrence exactly and evaluates the
//!   known closed forms and asymptotics.
//! * [`distribution`] covers limit-law constants, fixed-point sampling and
//!   exact small-size cost distributions.

pub mod analytic;
pub mod costmodel;
pub mod distribution;
pub mod sortcore;

pub use costmodel::Measure;
pub use costmodel::{CostVector, FrequencyVector};
pub use sortcore::{dual_pivot_sort, BlockTrace, PartitionStepRecord, SortRun};
