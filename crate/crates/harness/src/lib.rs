//! Seeded Monte Carlo experiments, reports and file output built on the
//! `dualpivot` library. The `dualpivot` binary is a thin front end over this
//! crate.

pub mod experiment;
pub mod histogram;
pub mod output;
pub mod predict;
pub mod report;
pub mod rng;
pub mod stats;

pub use experiment::{enumerate_moments, run_enumerated, run_experiment, ExperimentConfig};
pub use histogram::Histogram;
pub use output::{write_histogram_csv, write_pmf_csv, write_stats_csv};
pub use predict::{exact_expectation, predicted_variance, savings_curve};
pub use report::report_summary;
pub use rng::{random_permutation, trial_rng};
pub use stats::{IntegerMoments, MeasureStats, RunningStats, SampleStats};

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Analytic(#[from] dualpivot::analytic::AnalyticError),
    #[error(transparent)]
    Distribution(#[from] dualpivot::distribution::DistributionError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl HarnessError {
    /// Process exit code: 2 for I/O failures, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Io { .. } => 2,
            _ => 1,
        }
    }
}
