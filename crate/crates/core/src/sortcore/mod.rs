//! Instrumented sorting routines.
//!
//! Block numbering follows the control-flow graph of the dual-pivot routine:
//! blocks `1..=20` for Quicksort and `1..=8` for the Insertionsort used on
//! small subarrays.

mod classic;
mod dual_pivot;
mod insertion;
mod step;
mod trace;

pub use classic::{classic_sort, ClassicCounts};
pub use dual_pivot::{dual_pivot_sort, SortRun};
pub use insertion::insertion_sort;
pub use step::PartitionStepRecord;
pub use trace::{BlockCounts, BlockTrace, INSERTION_BLOCKS, QUICKSORT_BLOCKS};
