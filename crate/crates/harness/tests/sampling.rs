use std::collections::HashMap;

use dualpivot::sortcore::classic_sort;
use dualpivot_harness::{random_permutation, trial_rng, Histogram, IntegerMoments, RunningStats};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn trivial_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    assert!(random_permutation(0, &mut rng).is_empty());
    assert_eq!(random_permutation(1, &mut rng), vec![1]);
    let mut p = random_permutation(500, &mut rng);
    p.sort_unstable();
    assert_eq!(p, (1..=500).collect::<Vec<i64>>());
}

#[test]
fn permutations_of_three_are_uniform() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut counts: HashMap<Vec<i64>, u64> = HashMap::new();
    for _ in 0..60_000 {
        *counts.entry(random_permutation(3, &mut rng)).or_default() += 1;
    }
    assert_eq!(counts.len(), 6);
    let chi2: f64 = counts.values().map(|&c| (c as f64 - 10_000.0).powi(2) / 10_000.0).sum();
    // 5 degrees of freedom: P(chi2 > 35.9) is about 1e-6.
    assert!(chi2 < 35.9, "chi2 = {chi2}");
    assert!(counts.values().all(|&c| c.abs_diff(10_000) <= 400), "{counts:?}");
}

#[test]
fn trial_streams_are_independent_of_order() {
    let forward: Vec<u64> = (0..8).map(|t| trial_rng(9, 1, t).gen()).collect();
    let backward: Vec<u64> = (0..8).rev().map(|t| trial_rng(9, 1, t).gen()).collect::<Vec<_>>().into_iter().rev().collect();
    assert_eq!(forward, backward);
    assert_ne!(trial_rng(9, 1, 0).gen::<u64>(), trial_rng(9, 2, 0).gen::<u64>());
    assert_ne!(trial_rng(9, 1, 0).gen::<u64>(), trial_rng(10, 1, 0).gen::<u64>());
}

#[test]
fn moments_need_two_samples_for_a_variance() {
    let mut m = IntegerMoments::default();
    assert_eq!(m.mean(), None);
    m.push(7);
    assert_eq!(m.mean(), Some(7.0));
    assert_eq!(m.variance(), None);
    m.push(9);
    assert_eq!(m.variance(), Some(2.0));
    assert_eq!(RunningStats::from_samples(&[1.5]).variance(), None);
}

proptest! {
    #[test]
    fn integer_merge_is_exact(xs in prop::collection::vec(0u64..1_000_000_000, 0..200), split in 0usize..200) {
        let split = split.min(xs.len());
        let mut whole = IntegerMoments::default();
        xs.iter().for_each(|&x| whole.push(x));
        let (mut left, mut right) = (IntegerMoments::default(), IntegerMoments::default());
        xs[..split].iter().for_each(|&x| left.push(x));
        xs[split..].iter().for_each(|&x| right.push(x));
        let mut merged = right;
        merged.merge(&left);
        prop_assert_eq!(merged, whole);
    }

    #[test]
    fn float_merge_matches_single_pass(
        xs in prop::collection::vec(-1e6f64..1e6, 2..300),
        cuts in prop::collection::vec(0usize..300, 0..6),
    ) {
        let whole = RunningStats::from_samples(&xs);
        let mut bounds: Vec<usize> = cuts.into_iter().map(|c| c.min(xs.len())).collect();
        bounds.extend([0, xs.len()]);
        bounds.sort_unstable();
        let parts: Vec<RunningStats> = bounds.windows(2).map(|w| RunningStats::from_samples(&xs[w[0]..w[1]])).collect();
        let mut forward = RunningStats::default();
        parts.iter().for_each(|p| forward.merge(p));
        let mut backward = RunningStats::default();
        parts.iter().rev().for_each(|p| backward.merge(p));
        let rel = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.abs().max(1.0);
        for merged in [forward, backward] {
            prop_assert_eq!(merged.count(), whole.count());
            prop_assert!(rel(merged.mean().unwrap(), whole.mean().unwrap()));
            prop_assert!(rel(merged.variance().unwrap(), whole.variance().unwrap()));
        }
    }
}

#[test]
fn freedman_diaconis_bins() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let xs: Vec<f64> = (0..8000).map(|_| rng.gen::<f64>()).collect();
    let h = Histogram::from_samples(&xs, None).unwrap();
    assert_eq!(h.total(), 8000);
    // IQR 0.5 and n^(1/3) = 20 give width about 0.05.
    assert!((18..=22).contains(&h.counts.len()), "{} bins", h.counts.len());
    let h = Histogram::from_samples(&xs, Some(7)).unwrap();
    assert_eq!(h.counts.len(), 7);
    assert!((h.left + 7.0 * h.width - xs.iter().cloned().fold(f64::MIN, f64::max)).abs() < 1e-12);
    let flat = Histogram::from_samples(&[3.0; 10], None).unwrap();
    assert_eq!(flat.counts, vec![10]);
    assert!(Histogram::from_samples(&[], None).is_none());
}

#[test]
fn classic_leading_coefficient_is_two() {
    let mean_cmps = |n: usize, trials: u64| {
        let total: u64 = (0..trials)
            .map(|t| classic_sort(&mut random_permutation(n, &mut trial_rng(77, n, t)), 1).comparisons)
            .sum();
        total as f64 / trials as f64
    };
    let (n1, n2) = (10_000f64, 100_000f64);
    let (c1, c2) = (mean_cmps(10_000, 2000), mean_cmps(100_000, 300));
    let leading = (c2 / n2 - c1 / n1) / (n2.ln() - n1.ln());
    assert!((leading - 2.0).abs() < 0.05, "{leading}");
}
