use super::BlockTrace;

/// Straight insertion sort on `segment`, adding its block entries and key
/// comparisons/writes to `trace`.
///
/// Empty and single-element segments still run the loop header once (block 2),
/// as the Quicksort base case calls this on every small subarray.
pub fn insertion_sort<T: Ord + Clone>(segment: &mut [T], trace: &mut BlockTrace) {
    let blocks = &mut trace.blocks;
    blocks.hit_insertion(1);
    let mut i = 1;
    loop {
        blocks.hit_insertion(2);
        if i >= segment.len() {
            break;
        }
        blocks.hit_insertion(3);
        let value = segment[i].clone();
        // Position one left of the insertion slot; -1 means the front.
        let mut j = i as isize - 1;
        loop {
            blocks.hit_insertion(4);
            trace.comparisons += 1;
            if value >= segment[j as usize] {
                break;
            }
            blocks.hit_insertion(5);
            segment[(j + 1) as usize] = segment[j as usize].clone();
            trace.writes += 1;
            j -= 1;
            if j < 0 {
                blocks.hit_insertion(6);
                break;
            }
        }
        blocks.hit_insertion(7);
        segment[(j + 1) as usize] = value;
        trace.writes += 1;
        i += 1;
    }
    blocks.hit_insertion(8);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_segment_checks_loop_once() {
        let mut trace = BlockTrace::default();
        let mut keys: [i64; 0] = [];
        insertion_sort(&mut keys, &mut trace);
        assert_eq!(trace.blocks.insertion(2), 1);
        assert_eq!(trace.comparisons, 0);
        assert_eq!(trace.writes, 0);
    }

    #[test]
    fn sorted_input_rewrites_each_element_once() {
        let mut trace = BlockTrace::default();
        let mut keys = [1, 2, 3];
        insertion_sort(&mut keys, &mut trace);
        assert_eq!(keys, [1, 2, 3]);
        assert_eq!(trace.comparisons, 2);
        assert_eq!(trace.writes, 2);
    }

    #[test]
    fn both_orders_of_two_average_one_comparison() {
        let mut total = 0;
        for mut keys in [[1, 2], [2, 1]] {
            let mut trace = BlockTrace::default();
            insertion_sort(&mut keys, &mut trace);
            assert_eq!(keys, [1, 2]);
            total += trace.comparisons;
        }
        assert_eq!(total, 2);
    }

    #[test]
    fn reversed_input_shifts_every_pair() {
        let mut trace = BlockTrace::default();
        let mut keys = [4, 3, 2, 1];
        insertion_sort(&mut keys, &mut trace);
        assert_eq!(keys, [1, 2, 3, 4]);
        // 6 inversions, every element ends at the front.
        assert_eq!(trace.blocks.insertion(5), 6);
        assert_eq!(trace.blocks.insertion(6), 3);
        assert_eq!(trace.comparisons, 6);
    }
}
