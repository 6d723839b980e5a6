use std::fmt;
use std::str::FromStr;

use super::{block_counts, FlowViolation, FrequencyVector, WeightTable};
use crate::sortcore::BlockCounts;

/// One of the four cost measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Comparisons,
    Swaps,
    Writes,
    Bytecodes,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Comparisons, Measure::Swaps, Measure::Writes, Measure::Bytecodes];

    /// Short tag used in CSV headers and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            Measure::Comparisons => "cmps",
            Measure::Swaps => "swaps",
            Measure::Writes => "writes",
            Measure::Bytecodes => "bytecodes",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cmps" | "comparisons" => Ok(Measure::Comparisons),
            "swaps" => Ok(Measure::Swaps),
            "writes" => Ok(Measure::Writes),
            "bytecodes" | "bc" => Ok(Measure::Bytecodes),
            other => Err(format!("unknown measure `{other}` (cmps, swaps, writes, bytecodes)")),
        }
    }
}

/// The four cost measures of one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CostVector {
    pub comparisons: u64,
    pub swaps: u64,
    pub writes: u64,
    pub bytecodes: u64,
}

impl CostVector {
    pub fn get(&self, measure: Measure) -> u64 {
        match measure {
            Measure::Comparisons => self.comparisons,
            Measure::Swaps => self.swaps,
            Measure::Writes => self.writes,
            Measure::Bytecodes => self.bytecodes,
        }
    }

    /// The directly maintained counters of a trace, with bytecodes from its
    /// block counts.
    pub fn from_trace(trace: &crate::sortcore::BlockTrace, weights: &WeightTable) -> Self {
        CostVector {
            comparisons: trace.comparisons,
            swaps: trace.swaps,
            writes: trace.writes,
            bytecodes: weights.apply(&trace.blocks),
        }
    }
}

/// Costs implied by `fv` under the bytecode weight table.
pub fn derive_costs(fv: &FrequencyVector) -> Result<CostVector, FlowViolation> {
    derive_costs_with(fv, &WeightTable::bytecode())
}

/// Costs implied by `fv`; the instruction count uses `weights`.
///
/// Comparisons include those made by Insertionsort. Block 16 moves two
/// elements with three writes and counts as two swaps; the final pivot
/// placement counts two swaps and four writes.
pub fn derive_costs_with(fv: &FrequencyVector, weights: &WeightTable) -> Result<CostVector, FlowViolation> {
    let blocks = block_counts(fv)?;
    let large_at_g = fv.c4 - fv.s3;
    let insertion_writes = fv.is_e + (fv.is_g - fv.is_i);
    Ok(CostVector {
        comparisons: fv.c1 + (fv.c1 - fv.s1) + fv.c3 + fv.c4 + fv.a + fv.is_d + fv.is_e,
        swaps: fv.s1 + large_at_g + 2 * fv.s3 + 2 * fv.a,
        writes: 2 * fv.s1 + 2 * large_at_g + 3 * fv.s3 + 4 * fv.a + insertion_writes,
        bytecodes: weights.apply(&blocks),
    })
}

/// Weighted sum of block counts, e.g. of a traced run.
pub fn weighted_block_sum(counts: &BlockCounts, weights: &WeightTable) -> u64 {
    weights.apply(counts)
}
