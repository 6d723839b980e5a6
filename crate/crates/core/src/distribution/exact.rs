use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::DistributionError;
use crate::analytic::{expected_cost, EvalMode, Scalar};
use crate::costmodel::{CostVector, WeightTable};
use crate::sortcore::dual_pivot_sort;
use crate::Measure;

/// Largest size [`exact_distribution`] enumerates (10! runs).
pub const MAX_EXACT_SIZE: usize = 10;

/// A finitely supported distribution on integer costs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pmf {
    entries: Vec<(u64, BigRational)>,
}

impl Pmf {
    /// From occurrence counts; probabilities are `count / total`.
    ///
    /// # Panics
    /// If all counts are zero.
    pub fn from_counts(counts: &BTreeMap<u64, u64>) -> Self {
        let total: u64 = counts.values().sum();
        assert!(total > 0, "a distribution needs at least one outcome");
        let entries = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&v, &c)| (v, BigRational::new(BigInt::from(c), BigInt::from(total))))
            .collect();
        Pmf { entries }
    }

    /// Support values in ascending order with their probabilities.
    pub fn entries(&self) -> &[(u64, BigRational)] {
        &self.entries
    }

    pub fn probability(&self, value: u64) -> BigRational {
        self.entries
            .binary_search_by_key(&value, |(v, _)| *v)
            .map(|i| self.entries[i].1.clone())
            .unwrap_or_else(|_| <BigRational as Zero>::zero())
    }

    pub fn total(&self) -> BigRational {
        self.entries.iter().map(|(_, p)| p).sum()
    }

    pub fn mean(&self) -> BigRational {
        self.entries.iter().map(|(v, p)| p * BigRational::from_integer(BigInt::from(*v))).sum()
    }

    pub fn variance(&self) -> BigRational {
        let mean = self.mean();
        self.entries
            .iter()
            .map(|(v, p)| {
                let d = BigRational::from_integer(BigInt::from(*v)) - &mean;
                p * &d * &d
            })
            .sum()
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (1..=n as i64).permutations(n)
}

/// Exact distribution of a cost over all `n!` inputs of size `n`.
pub fn exact_distribution(measure: Measure, cutoff: usize, n: usize) -> Result<Pmf, DistributionError> {
    if n > MAX_EXACT_SIZE {
        return Err(DistributionError::SizeCap { n, max: MAX_EXACT_SIZE });
    }
    let weights = WeightTable::bytecode();
    let mut counts = BTreeMap::new();
    for mut keys in all_permutations(n) {
        let run = dual_pivot_sort(&mut keys, cutoff, false);
        *counts.entry(CostVector::from_trace(&run.trace, &weights).get(measure)).or_insert(0u64) += 1;
    }
    Ok(Pmf::from_counts(&counts))
}

/// `(cost - E[C_n]) / n`, and `0` for `n = 0`.
pub fn normalize<T: Scalar>(cost: u64, n: usize, measure: Measure, cutoff: usize) -> T {
    if n == 0 {
        return T::zero();
    }
    let expected: T = expected_cost(measure, cutoff, n, EvalMode::Recurrence).expect("cutoff must be at least 1");
    (T::from_int(cost as i128) - expected) / T::from_int(n as i128)
}

impl Default for Pmf {
    /// Point mass at 0.
    fn default() -> Self {
        Pmf { entries: vec![(0, BigRational::one())] }
    }
}
