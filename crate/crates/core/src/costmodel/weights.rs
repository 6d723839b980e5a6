use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::sortcore::{BlockCounts, INSERTION_BLOCKS, QUICKSORT_BLOCKS};

/// Instruction weight per basic block.
///
/// The default is the Java bytecode count of each block. Block 2 (the jump
/// into the base case) carries no instructions of its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub quicksort: [u64; QUICKSORT_BLOCKS],
    pub insertion: [u64; INSERTION_BLOCKS],
}

const BYTECODE_QUICKSORT: [u64; QUICKSORT_BLOCKS] =
    [5, 0, 7, 8, 9, 10, 3, 7, 12, 3, 5, 3, 2, 5, 6, 14, 5, 2, 42, 1];
const BYTECODE_INSERTION: [u64; INSERTION_BLOCKS] = [8, 3, 8, 5, 12, 1, 8, 2];

impl Default for WeightTable {
    fn default() -> Self {
        Self::bytecode()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightTableError {
    #[error("line {line}: expected `block=weight`, got `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown block `{block}` (use 1..20 or i1..i8)")]
    UnknownBlock { line: usize, block: String },
    #[error("line {line}: weight `{value}` is not a non-negative integer")]
    BadWeight { line: usize, value: String },
}

impl WeightTable {
    /// Java bytecode instructions per block.
    pub fn bytecode() -> Self {
        Self { quicksort: BYTECODE_QUICKSORT, insertion: BYTECODE_INSERTION }
    }

    /// Weight of every block summed over `counts`.
    pub fn apply(&self, counts: &BlockCounts) -> u64 {
        let qs = self.quicksort.iter().zip(counts.quicksort_counts()).map(|(w, c)| w * c);
        let is = self.insertion.iter().zip(counts.insertion_counts()).map(|(w, c)| w * c);
        qs.chain(is).sum()
    }
}

/// Parses `block=weight` lines on top of the bytecode defaults.
///
/// Quicksort blocks are `1`..`20`, Insertionsort blocks `i1`..`i8`. Blank
/// lines and `#` comments are ignored; unlisted blocks keep their default.
impl FromStr for WeightTable {
    type Err = WeightTableError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut table = Self::bytecode();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| WeightTableError::Syntax { line, text: raw.to_string() })?;
            let (key, value) = (key.trim(), value.trim());
            let weight: u64 = value
                .parse()
                .map_err(|_| WeightTableError::BadWeight { line, value: value.to_string() })?;
            let unknown = || WeightTableError::UnknownBlock { line, block: key.to_string() };
            let slot = match key.strip_prefix('i') {
                Some(rest) => rest
                    .parse::<usize>()
                    .ok()
                    .filter(|b| (1..=INSERTION_BLOCKS).contains(b))
                    .map(|b| &mut table.insertion[b - 1]),
                None => key
                    .parse::<usize>()
                    .ok()
                    .filter(|b| (1..=QUICKSORT_BLOCKS).contains(b))
                    .map(|b| &mut table.quicksort[b - 1]),
            }
            .ok_or_else(unknown)?;
            *slot = weight;
        }
        Ok(table)
    }
}

impl fmt::Display for WeightTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.quicksort.iter().enumerate() {
            writeln!(f, "{}={}", i + 1, w)?;
        }
        for (i, w) in self.insertion.iter().enumerate() {
            writeln!(f, "i{}={}", i + 1, w)?;
        }
        Ok(())
    }
}
