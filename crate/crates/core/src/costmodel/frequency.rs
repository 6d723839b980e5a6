use std::fmt;

use super::FlowViolation;
use crate::sortcore::{BlockCounts, BlockTrace, INSERTION_BLOCKS, QUICKSORT_BLOCKS};

/// The thirteen independent frequencies that fix every block count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Frequency {
    /// Partitioning steps.
    A,
    /// Steps whose two outer elements arrive out of order.
    B,
    /// Recursive calls, including trivial ones.
    R,
    /// Inner-loop exits through the index test.
    F,
    C1,
    C3,
    C4,
    S1,
    S3,
    /// Insertionsort calls.
    InsertionCalls,
    /// Insertionsort outer-loop tests.
    InsertionOuter,
    /// Insertionsort inner loops left because the key found its place.
    InsertionStops,
    /// Insertionsort element shifts.
    InsertionShifts,
}

impl Frequency {
    pub const ALL: [Frequency; 13] = [
        Frequency::A,
        Frequency::B,
        Frequency::R,
        Frequency::F,
        Frequency::C1,
        Frequency::C3,
        Frequency::C4,
        Frequency::S1,
        Frequency::S3,
        Frequency::InsertionCalls,
        Frequency::InsertionOuter,
        Frequency::InsertionStops,
        Frequency::InsertionShifts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Frequency::A => "A",
            Frequency::B => "B",
            Frequency::R => "R",
            Frequency::F => "F",
            Frequency::C1 => "C1",
            Frequency::C3 => "C3",
            Frequency::C4 => "C4",
            Frequency::S1 => "S1",
            Frequency::S3 => "S3",
            Frequency::InsertionCalls => "IS_I",
            Frequency::InsertionOuter => "IS_G",
            Frequency::InsertionStops => "IS_D",
            Frequency::InsertionShifts => "IS_E",
        }
    }

    pub fn parse(name: &str) -> Option<Frequency> {
        Frequency::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(name))
    }

    pub fn is_insertion(self) -> bool {
        matches!(
            self,
            Frequency::InsertionCalls
                | Frequency::InsertionOuter
                | Frequency::InsertionStops
                | Frequency::InsertionShifts
        )
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Frequencies of one run (or of a sum of runs).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct FrequencyVector {
    pub a: u64,
    pub b: u64,
    pub r: u64,
    pub f: u64,
    pub c1: u64,
    pub c3: u64,
    pub c4: u64,
    pub s1: u64,
    pub s3: u64,
    pub is_i: u64,
    pub is_g: u64,
    pub is_d: u64,
    pub is_e: u64,
}

impl FrequencyVector {
    /// Reads the frequencies off a traced run.
    pub fn from_trace(trace: &BlockTrace) -> Self {
        let qs = |b| trace.blocks.quicksort(b);
        let is = |b| trace.blocks.insertion(b);
        Self {
            a: qs(3),
            b: qs(4),
            r: qs(1),
            f: qs(12) - qs(13),
            c1: qs(8),
            c3: qs(11),
            c4: qs(14),
            s1: qs(9),
            s3: qs(16),
            is_i: is(1),
            is_g: is(2),
            is_d: is(4) - is(5),
            is_e: is(5),
        }
    }

    pub fn get(&self, which: Frequency) -> u64 {
        match which {
            Frequency::A => self.a,
            Frequency::B => self.b,
            Frequency::R => self.r,
            Frequency::F => self.f,
            Frequency::C1 => self.c1,
            Frequency::C3 => self.c3,
            Frequency::C4 => self.c4,
            Frequency::S1 => self.s1,
            Frequency::S3 => self.s3,
            Frequency::InsertionCalls => self.is_i,
            Frequency::InsertionOuter => self.is_g,
            Frequency::InsertionStops => self.is_d,
            Frequency::InsertionShifts => self.is_e,
        }
    }
}

fn difference(block: &str, lhs: (&str, u64), rhs: (&str, u64)) -> Result<u64, FlowViolation> {
    lhs.1.checked_sub(rhs.1).ok_or_else(|| FlowViolation {
        block: block.to_string(),
        lhs: format!("{}={}", lhs.0, lhs.1),
        rhs: format!("{}={}", rhs.0, rhs.1),
    })
}

/// All 28 block counts implied by `fv`.
///
/// Fails if some block would be entered a negative number of times.
pub fn block_counts(fv: &FrequencyVector) -> Result<BlockCounts, FlowViolation> {
    let not_partitioned = difference("2", ("R", fv.r), ("A", fv.a))?;
    let in_order = difference("5", ("A", fv.a), ("B", fv.b))?;
    let not_small = difference("10", ("C1", fv.c1), ("S1", fv.s1))?;
    let skipped = difference("13", ("C3", fv.c3), ("C4", fv.c4))?;
    let large_at_g = difference("15", ("C4", fv.c4), ("S3", fv.s3))?;
    let outer_runs = difference("i3", ("IS_G", fv.is_g), ("IS_I", fv.is_i))?;
    let front_stops = difference("i6", ("IS_G-IS_I", outer_runs), ("IS_D", fv.is_d))?;

    let quicksort: [u64; QUICKSORT_BLOCKS] = [
        fv.r,
        not_partitioned,
        fv.a,
        fv.b,
        in_order,
        fv.a,
        fv.a + fv.c1,
        fv.c1,
        fv.s1,
        not_small,
        fv.c3,
        skipped + fv.f,
        skipped,
        fv.c4,
        large_at_g,
        fv.s3,
        fv.c4,
        fv.c1,
        fv.a,
        fv.r,
    ];
    let insertion: [u64; INSERTION_BLOCKS] = [
        fv.is_i,
        fv.is_g,
        outer_runs,
        fv.is_e + fv.is_d,
        fv.is_e,
        front_stops,
        outer_runs,
        fv.is_i,
    ];
    Ok(BlockCounts::from_arrays(quicksort, insertion))
}
