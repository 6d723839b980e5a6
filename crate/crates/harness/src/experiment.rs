use std::path::PathBuf;

use dualpivot::distribution::all_permutations;
use dualpivot::sortcore::dual_pivot_sort;
use dualpivot::{CostVector, Measure};
use dualpivot::costmodel::WeightTable;
use rayon::prelude::*;

use crate::predict::{exact_expectation, predicted_variance};
use crate::rng::{random_permutation, trial_rng, TRIAL_BITS};
use crate::stats::{IntegerMoments, MeasureStats, SampleStats};
use crate::HarnessError;

/// Trials per work unit handed to the thread pool.
const CHUNK: u64 = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub sizes: Vec<usize>,
    pub trials: u64,
    pub cutoff: usize,
    pub seed: u64,
    pub measures: Vec<Measure>,
    pub output: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            sizes: vec![1_000, 10_000, 100_000],
            trials: 10_000,
            cutoff: 7,
            seed: 0,
            measures: Measure::ALL.to_vec(),
            output: None,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let fail = |msg: String| Err(HarnessError::Config(msg));
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.trials >= 1 << TRIAL_BITS {
            return fail(format!("trials must be below 2^{TRIAL_BITS}"));
        }
        if self.sizes.is_empty() {
            return fail("at least one size is required".into());
        }
        if let Some(n) = self.sizes.iter().find(|&&n| n < 2) {
            return fail(format!("sizes must be at least 2, got {n}"));
        }
        if self.cutoff == 0 {
            return fail("cutoff must be at least 1".into());
        }
        if self.measures.is_empty() {
            return fail("at least one measure is required".into());
        }
        Ok(())
    }
}

fn record(moments: &mut [IntegerMoments; 4], costs: &CostVector) {
    for (slot, m) in moments.iter_mut().zip(Measure::ALL) {
        slot.push(costs.get(m));
    }
}

fn run_trials(n: usize, size_index: usize, config: &ExperimentConfig, trials: std::ops::Range<u64>) -> [IntegerMoments; 4] {
    let weights = WeightTable::bytecode();
    let mut moments = [IntegerMoments::default(); 4];
    for trial in trials {
        let mut keys = random_permutation(n, &mut trial_rng(config.seed, size_index, trial));
        let run = dual_pivot_sort(&mut keys, config.cutoff, false);
        record(&mut moments, &CostVector::from_trace(&run.trace, &weights));
    }
    moments
}

fn summarize(n: usize, cutoff: usize, measures: &[Measure], moments: &[IntegerMoments; 4]) -> Result<SampleStats, HarnessError> {
    let stats = measures
        .iter()
        .map(|&m| {
            let i = Measure::ALL.iter().position(|&x| x == m).expect("known measure");
            Ok(MeasureStats::new(m, &moments[i], exact_expectation(m, cutoff, n)?, predicted_variance(m, n)))
        })
        .collect::<Result<_, HarnessError>>()?;
    Ok(SampleStats { n, trials: moments[0].count(), measures: stats })
}

/// Sorts `trials` fresh random permutations per size and compares sample
/// moments with the analytic predictions.
///
/// Trials are spread over the rayon pool in fixed chunks. Each trial owns
/// its random stream and the moments are exact integers, so results are
/// identical for every thread count.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<SampleStats>, HarnessError> {
    config.validate()?;
    config
        .sizes
        .iter()
        .enumerate()
        .map(|(size_index, &n)| {
            let chunks: Vec<u64> = (0..config.trials).step_by(CHUNK as usize).collect();
            let moments = chunks
                .into_par_iter()
                .map(|start| run_trials(n, size_index, config, start..(start + CHUNK).min(config.trials)))
                .reduce(
                    || [IntegerMoments::default(); 4],
                    |mut acc, part| {
                        acc.iter_mut().zip(&part).for_each(|(a, b)| a.merge(b));
                        acc
                    },
                );
            summarize(n, config.cutoff, &config.measures, &moments)
        })
        .collect()
}

/// Exact cost moments over all `n!` permutations of `1..=n`, indexed like
/// [`Measure::ALL`].
pub fn enumerate_moments(n: usize, cutoff: usize) -> [IntegerMoments; 4] {
    let weights = WeightTable::bytecode();
    let mut moments = [IntegerMoments::default(); 4];
    for mut keys in all_permutations(n) {
        let run = dual_pivot_sort(&mut keys, cutoff, false);
        record(&mut moments, &CostVector::from_trace(&run.trace, &weights));
    }
    moments
}

/// [`run_experiment`] for one small size, over every permutation instead of
/// random samples.
pub fn run_enumerated(n: usize, cutoff: usize, measures: &[Measure]) -> Result<SampleStats, HarnessError> {
    if n > dualpivot::distribution::MAX_EXACT_SIZE {
        return Err(HarnessError::Config(format!("enumeration is limited to n <= {}", dualpivot::distribution::MAX_EXACT_SIZE)));
    }
    if cutoff == 0 {
        return Err(HarnessError::Config("cutoff must be at least 1".into()));
    }
    summarize(n, cutoff, measures, &enumerate_moments(n, cutoff))
}
