use std::ops::AddAssign;

/// Number of basic blocks in the Quicksort control-flow graph.
pub const QUICKSORT_BLOCKS: usize = 20;
/// Number of basic blocks in the Insertionsort control-flow graph.
pub const INSERTION_BLOCKS: usize = 8;

/// Entry counts for every basic block, indexed from 1 as in the CFG.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BlockCounts {
    quicksort: [u64; QUICKSORT_BLOCKS],
    insertion: [u64; INSERTION_BLOCKS],
}

impl BlockCounts {
    pub fn from_arrays(
        quicksort: [u64; QUICKSORT_BLOCKS],
        insertion: [u64; INSERTION_BLOCKS],
    ) -> Self {
        Self { quicksort, insertion }
    }

    /// Count of Quicksort block `block` (1-based).
    ///
    /// # Panics
    /// If `block` is not in `1..=20`.
    pub fn quicksort(&self, block: usize) -> u64 {
        self.quicksort[block - 1]
    }

    /// Count of Insertionsort block `block` (1-based).
    ///
    /// # Panics
    /// If `block` is not in `1..=8`.
    pub fn insertion(&self, block: usize) -> u64 {
        self.insertion[block - 1]
    }

    pub fn quicksort_counts(&self) -> &[u64; QUICKSORT_BLOCKS] {
        &self.quicksort
    }

    pub fn insertion_counts(&self) -> &[u64; INSERTION_BLOCKS] {
        &self.insertion
    }

    pub(crate) fn hit(&mut self, block: usize) {
        self.quicksort[block - 1] += 1;
    }

    pub(crate) fn hit_insertion(&mut self, block: usize) {
        self.insertion[block - 1] += 1;
    }
}

impl AddAssign<&BlockCounts> for BlockCounts {
    fn add_assign(&mut self, rhs: &BlockCounts) {
        for (a, b) in self.quicksort.iter_mut().zip(rhs.quicksort) {
            *a += b;
        }
        for (a, b) in self.insertion.iter_mut().zip(rhs.insertion) {
            *a += b;
        }
    }
}

/// Everything counted during one sort: block entries plus the directly
/// maintained key comparison, swap and array-write counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BlockTrace {
    pub blocks: BlockCounts,
    pub comparisons: u64,
    pub swaps: u64,
    pub writes: u64,
}

impl AddAssign<&BlockTrace> for BlockTrace {
    fn add_assign(&mut self, rhs: &BlockTrace) {
        self.blocks += &rhs.blocks;
        self.comparisons += rhs.comparisons;
        self.swaps += rhs.swaps;
        self.writes += rhs.writes;
    }
}
