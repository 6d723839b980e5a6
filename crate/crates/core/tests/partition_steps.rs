//! Exhaustive checks of the first partitioning step over all inputs of
//! small sizes: the step frequencies follow exact hypergeometric laws.

use std::collections::HashMap;

use dualpivot::analytic::rational;
use dualpivot::costmodel::verify_step;
use dualpivot::distribution::{all_permutations, hypergeometric_pmf};
use dualpivot::sortcore::{dual_pivot_sort, PartitionStepRecord};
use num_rational::BigRational;

fn top_steps(n: usize) -> Vec<PartitionStepRecord> {
    all_permutations(n)
        .map(|mut keys| {
            let steps = dual_pivot_sort(&mut keys, 1, true).steps.unwrap();
            for step in &steps {
                assert!(verify_step(step).is_empty());
            }
            steps[0]
        })
        .collect()
}

/// Empirical law of `value` within each group, as exact fractions.
fn grouped<K: std::hash::Hash + Eq + Copy>(
    steps: &[PartitionStepRecord],
    key: impl Fn(&PartitionStepRecord) -> K,
    value: impl Fn(&PartitionStepRecord) -> u64,
) -> HashMap<K, HashMap<u64, BigRational>> {
    let mut counts: HashMap<K, HashMap<u64, i64>> = HashMap::new();
    for s in steps {
        *counts.entry(key(s)).or_default().entry(value(s)).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(k, law)| {
            let total: i64 = law.values().sum();
            (k, law.into_iter().map(|(v, c)| (v, rational(c, total))).collect())
        })
        .collect()
}

fn assert_matches(law: &HashMap<u64, BigRational>, expected: impl Fn(u64) -> BigRational, support: u64) {
    for j in 0..=support {
        let seen = law.get(&j).cloned().unwrap_or_else(|| rational(0, 1));
        assert_eq!(seen, expected(j), "value {j}");
    }
}

/// `(I1, I2, I3)`: sizes of the small, medium and large subproblems.
fn sizes(s: &PartitionStepRecord) -> (u64, u64, u64) {
    let (p, q, n) = (s.small_pivot_rank as u64, s.large_pivot_rank as u64, s.len as u64);
    (p - 1, q - p - 1, n - q)
}

#[test]
fn small_hits_given_pivot_ranks_are_hypergeometric() {
    for n in 2..=8usize {
        let steps = top_steps(n);
        let laws = grouped(&steps, |s| (s.small_pivot_rank as u64, s.large_pivot_rank as u64), |s| s.s1);
        assert_eq!(laws.len(), n * (n - 1) / 2);
        for ((p, q), law) in laws {
            let total = n as u64 - 2;
            assert_matches(&law, |j| hypergeometric_pmf(p - 1, q - 2, total, j).unwrap(), total);
        }
    }
}

#[test]
fn overshoot_has_mean_one_third() {
    for n in 3..=8 {
        let steps = top_steps(n);
        let sum: u64 = steps.iter().map(|s| s.overshoot).sum();
        assert_eq!(rational(sum as i64, steps.len() as i64), rational(1, 3), "n = {n}");
    }
}

#[test]
fn step_laws_given_subproblem_sizes() {
    for n in 3..=8usize {
        let total = n as u64 - 2;
        let steps = top_steps(n);
        for (sizes, law) in grouped(&steps, sizes, |s| s.overshoot) {
            let large = rational(sizes.2 as i64, total as i64);
            let expected = |j| if j == 1 { large.clone() } else { rational(1, 1) - large.clone() };
            assert_matches(&law, expected, 1);
        }
        for ((i1, i2, i3), law) in grouped(&steps, sizes, |s| s.c4 - s.overshoot) {
            assert_matches(&law, |j| hypergeometric_pmf(i1 + i2, i3, total, j).unwrap(), total);
        }
        for ((i1, i2, _), law) in grouped(&steps, sizes, |s| s.s1) {
            assert_matches(&law, |j| hypergeometric_pmf(i1, i1 + i2, total, j).unwrap(), total);
        }
    }
}

#[test]
fn subproblem_sizes_are_uniform() {
    for n in 2..=8usize {
        let steps = top_steps(n);
        let mut counts: HashMap<(u64, u64, u64), usize> = HashMap::new();
        for s in &steps {
            *counts.entry(sizes(s)).or_default() += 1;
        }
        let compositions = n * (n - 1) / 2;
        assert_eq!(counts.len(), compositions);
        assert!(counts.values().all(|&c| c * compositions == steps.len()));
    }
}
