/// Key comparisons and swaps of a [`classic_sort`] run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassicCounts {
    pub comparisons: u64,
    pub swaps: u64,
}

/// Classic single-pivot Quicksort (last element as pivot, crossing scans),
/// used as a baseline. Subarrays shorter than or equal to `cutoff` are
/// finished with insertion sort; its comparisons are counted, its shifts are
/// not swaps.
///
/// # Panics
/// If `cutoff` is 0.
pub fn classic_sort<T: Ord + Clone>(keys: &mut [T], cutoff: usize) -> ClassicCounts {
    assert!(cutoff >= 1, "cutoff must be at least 1");
    let mut counts = ClassicCounts::default();
    let mut pending: Vec<(isize, isize)> = vec![(0, keys.len() as isize - 1)];
    while let Some((left, right)) = pending.pop() {
        if right - left < cutoff as isize {
            if right > left {
                insert(&mut keys[left as usize..=right as usize], &mut counts);
            }
            continue;
        }
        let pivot = keys[right as usize].clone();
        let mut i = left - 1;
        let mut j = right;
        loop {
            loop {
                i += 1;
                counts.comparisons += 1;
                if keys[i as usize] >= pivot {
                    break;
                }
            }
            loop {
                j -= 1;
                if j < left {
                    break;
                }
                counts.comparisons += 1;
                if keys[j as usize] <= pivot {
                    break;
                }
            }
            if i >= j {
                break;
            }
            keys.swap(i as usize, j as usize);
            counts.swaps += 1;
        }
        keys.swap(i as usize, right as usize);
        counts.swaps += 1;
        pending.push((i + 1, right));
        pending.push((left, i - 1));
    }
    counts
}

fn insert<T: Ord + Clone>(segment: &mut [T], counts: &mut ClassicCounts) {
    for i in 1..segment.len() {
        let value = segment[i].clone();
        let mut j = i;
        while j > 0 {
            counts.comparisons += 1;
            if segment[j - 1] <= value {
                break;
            }
            segment[j] = segment[j - 1].clone();
            j -= 1;
        }
        segment[j] = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_needs_no_comparison() {
        let mut keys = [1];
        assert_eq!(classic_sort(&mut keys, 1).comparisons, 0);
    }

    #[test]
    fn pair_is_ordered() {
        let mut keys = [2, 1];
        let counts = classic_sort(&mut keys, 1);
        assert_eq!(keys, [1, 2]);
        assert!(counts.comparisons >= 1);
    }

    #[test]
    fn sorts_with_cutoff() {
        let mut keys: Vec<i64> = (0..200).map(|i| (i * 7919) % 211).collect();
        let mut expected = keys.clone();
        expected.sort();
        classic_sort(&mut keys, 6);
        assert_eq!(keys, expected);
    }
}
