/// What one partitioning step did, in positions relative to its subarray.
///
/// Positions and ranks are 1-based. Pointer values are taken when the main
/// loop has just exited, before the pivots are moved into place.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionStepRecord {
    /// Length of the partitioned subarray.
    pub len: usize,
    /// Rank of the small pivot within the subarray.
    pub small_pivot_rank: usize,
    /// Rank of the large pivot within the subarray.
    pub large_pivot_rank: usize,
    /// 1 when the scanning pointers overshoot each other by one, else 0.
    pub overshoot: u64,
    pub k_exit: usize,
    pub g_exit: usize,
    pub l_exit: usize,
    /// Outer-loop iterations (block 8 entries).
    pub c1: u64,
    /// Tests of the inner `A[g] > q` loop (block 11 entries).
    pub c3: u64,
    /// Elements exchanged between the `k` and `g` sides (block 14 entries).
    pub c4: u64,
    /// Small elements met by `k` (block 9 entries).
    pub s1: u64,
    /// Small elements met by `g` (block 16 entries).
    pub s3: u64,
    /// Inner-loop exits through the index test (block 12 minus block 13).
    pub f: u64,
    /// Small keys initially at positions `2..Q`.
    pub small_in_k_range: u64,
    /// Small or medium keys initially at positions `Q..n`.
    pub small_or_medium_in_g_range: u64,
    /// Whether the key initially at position `Q` exceeds the large pivot.
    pub initial_at_large_rank_exceeds_large_pivot: bool,
}
