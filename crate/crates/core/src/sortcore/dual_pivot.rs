use super::{insertion_sort, BlockTrace, PartitionStepRecord};

/// Result of one instrumented run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SortRun {
    pub trace: BlockTrace,
    /// One record per partitioning step, in the order steps ran.
    pub steps: Option<Vec<PartitionStepRecord>>,
}

/// Sorts `keys` in place with Yaroslavskiy's dual-pivot partitioning.
///
/// Subarrays of length at most `cutoff` go to [`insertion_sort`]. With
/// `cutoff == 1` Insertionsort is left out altogether, so trivial calls only
/// run the size check and the return.
///
/// Subproblems run in the recursive order (left, middle, right), but from an
/// explicit work stack so adversarial inputs cannot exhaust the call stack.
///
/// # Panics
/// If `cutoff` is 0.
pub fn dual_pivot_sort<T: Ord + Clone>(keys: &mut [T], cutoff: usize, collect_steps: bool) -> SortRun {
    assert!(cutoff >= 1, "cutoff must be at least 1");
    let mut trace = BlockTrace::default();
    let mut steps = collect_steps.then(Vec::new);
    let mut pending: Vec<(isize, isize)> = vec![(0, keys.len() as isize - 1)];
    while let Some((left, right)) = pending.pop() {
        trace.blocks.hit(1);
        if right - left < cutoff as isize {
            trace.blocks.hit(2);
            if cutoff > 1 {
                let segment = if right < left {
                    &mut keys[0..0]
                } else {
                    &mut keys[left as usize..=right as usize]
                };
                insertion_sort(segment, &mut trace);
            }
            trace.blocks.hit(20);
            continue;
        }
        let (lo, hi) = (left as usize, right as usize);
        let outcome = match steps.as_mut() {
            Some(records) => {
                let initial = keys[lo..=hi].to_vec();
                let before = trace;
                let outcome = partition(keys, lo, hi, &mut trace);
                records.push(record_step(&initial, lo, &before, &trace, &outcome));
                outcome
            }
            None => partition(keys, lo, hi, &mut trace),
        };
        trace.blocks.hit(20);
        let (l, g) = (outcome.small_pivot_at as isize, outcome.large_pivot_at as isize);
        pending.push((g + 1, right));
        pending.push((l + 1, g - 1));
        pending.push((left, l - 1));
    }
    SortRun { trace, steps }
}

struct Partitioned<T> {
    small_pivot_at: usize,
    large_pivot_at: usize,
    // Pointer values when the main loop exits.
    exit_l: usize,
    exit_g: usize,
    exit_k: usize,
    small_pivot: T,
    large_pivot: T,
}

/// One partitioning step on `keys[left..=right]`.
fn partition<T: Ord + Clone>(keys: &mut [T], left: usize, right: usize, trace: &mut BlockTrace) -> Partitioned<T> {
    let blocks = &mut trace.blocks;
    blocks.hit(3);
    trace.comparisons += 1;
    // Pivots live in locals; putting them in order costs no array writes.
    let (p, q) = if keys[left] > keys[right] {
        blocks.hit(4);
        (keys[right].clone(), keys[left].clone())
    } else {
        blocks.hit(5);
        (keys[left].clone(), keys[right].clone())
    };
    blocks.hit(6);
    let mut l = left + 1;
    // `g` may drop to `left` when everything is large, so keep it signed.
    let mut g = right as isize - 1;
    let mut k = l;
    loop {
        blocks.hit(7);
        if k as isize > g {
            break;
        }
        let current = keys[k].clone();
        blocks.hit(8);
        trace.comparisons += 1;
        if current < p {
            blocks.hit(9);
            keys[k] = keys[l].clone();
            keys[l] = current;
            l += 1;
            trace.writes += 2;
            trace.swaps += 1;
        } else {
            blocks.hit(10);
            trace.comparisons += 1;
            if current >= q {
                loop {
                    blocks.hit(11);
                    trace.comparisons += 1;
                    if keys[g as usize] <= q {
                        break;
                    }
                    blocks.hit(12);
                    if (k as isize) >= g {
                        break;
                    }
                    blocks.hit(13);
                    g -= 1;
                }
                let gu = g as usize;
                blocks.hit(14);
                trace.comparisons += 1;
                if keys[gu] < p {
                    // Two swaps folded into three writes (the third is below).
                    blocks.hit(16);
                    keys[k] = keys[l].clone();
                    keys[l] = keys[gu].clone();
                    l += 1;
                    trace.writes += 2;
                    trace.swaps += 2;
                } else {
                    blocks.hit(15);
                    keys[k] = keys[gu].clone();
                    trace.writes += 1;
                    trace.swaps += 1;
                }
                blocks.hit(17);
                keys[gu] = current;
                trace.writes += 1;
                g -= 1;
            }
        }
        blocks.hit(18);
        k += 1;
    }
    let (exit_l, exit_g, exit_k) = (l, g as usize, k);
    blocks.hit(19);
    let l = l - 1;
    let g = (g + 1) as usize;
    keys[left] = keys[l].clone();
    keys[l] = p.clone();
    keys[right] = keys[g].clone();
    keys[g] = q.clone();
    trace.writes += 4;
    trace.swaps += 2;
    Partitioned {
        small_pivot_at: l,
        large_pivot_at: g,
        exit_l,
        exit_g,
        exit_k,
        small_pivot: p,
        large_pivot: q,
    }
}

fn record_step<T: Ord>(
    initial: &[T],
    offset: usize,
    before: &BlockTrace,
    after: &BlockTrace,
    outcome: &Partitioned<T>,
) -> PartitionStepRecord {
    let (p, q) = (&outcome.small_pivot, &outcome.large_pivot);
    let n = initial.len();
    let delta = |block: usize| after.blocks.quicksort(block) - before.blocks.quicksort(block);
    let small_rank = 1 + initial.iter().filter(|x| *x < p).count();
    let large_rank = 1 + initial.iter().filter(|x| *x < q).count();
    // 0-based index ranges for the 1-based positions 2..Q-1 and Q..n-1.
    let k_range = 1..large_rank.saturating_sub(1).max(1);
    let g_range = large_rank.saturating_sub(1).min(n - 1)..n - 1;
    let k_exit = outcome.exit_k - offset + 1;
    let g_exit = outcome.exit_g + 1 - offset;
    PartitionStepRecord {
        len: n,
        small_pivot_rank: small_rank,
        large_pivot_rank: large_rank,
        overshoot: (k_exit - g_exit - 1) as u64,
        k_exit,
        g_exit,
        l_exit: outcome.exit_l - offset + 1,
        c1: delta(8),
        c3: delta(11),
        c4: delta(14),
        s1: delta(9),
        s3: delta(16),
        f: delta(12) - delta(13),
        small_in_k_range: initial[k_range].iter().filter(|x| *x < p).count() as u64,
        small_or_medium_in_g_range: initial[g_range].iter().filter(|x| *x < q).count() as u64,
        initial_at_large_rank_exceeds_large_pivot: initial[large_rank - 1] > *q,
    }
}
