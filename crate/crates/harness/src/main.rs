use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dualpivot::analytic::{asymptotic_expansion, expected_cost, optimal_cutoff, EvalMode};
use dualpivot::costmodel::{Frequency, WeightTable};
use dualpivot::distribution::{exact_distribution, normalize, FixedPointPool, LimitConstants};
use dualpivot::sortcore::dual_pivot_sort;
use dualpivot::{CostVector, FrequencyVector, Measure};
use dualpivot_harness::output::write_file;
use dualpivot_harness::{
    random_permutation, report_summary, run_experiment, savings_curve, trial_rng, write_histogram_csv, write_pmf_csv,
    write_stats_csv, ExperimentConfig, HarnessError, Histogram, RunningStats,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default directory for output files when `--out` is not given.
const OUT_DIR_VAR: &str = "DUALPIVOT_OUT_DIR";

#[derive(Parser)]
#[command(name = "dualpivot", version, about = "Instrumented dual-pivot Quicksort: counts, predictions and experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredictMode {
    Exact,
    Recurrence,
    Asymptotic,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistributionMode {
    Exact,
    Montecarlo,
    Fixpoint,
}

#[derive(Subcommand)]
enum Command {
    /// Sort one input and print block frequencies and costs.
    Sort {
        /// Comma-separated keys; a random permutation of --n is used otherwise.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        keys: Option<Vec<i64>>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also print one line per partitioning step.
        #[arg(long)]
        steps: bool,
    },
    /// Expected cost of sorting a random permutation.
    Predict {
        #[arg(long)]
        measure: Measure,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PredictMode::Exact)]
        mode: PredictMode,
    },
    /// Monte Carlo comparison of sample moments with predictions (CSV).
    Experiment {
        #[arg(long, value_delimiter = ',', default_values_t = [1_000usize, 10_000, 100_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = Measure::ALL.to_vec())]
        measures: Vec<Measure>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact, sampled or limiting distribution of a normalized cost (CSV).
    Distribution {
        #[arg(long)]
        measure: Measure,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, value_enum)]
        mode: DistributionMode,
        /// Truncation depth of the fixed-point expansion.
        #[arg(long, default_value_t = 30)]
        depth: usize,
        /// Sample count for montecarlo and fixpoint modes.
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long)]
        bins: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Limit variances and correlation, closed form and by quadrature.
    Constants,
    /// Cutoff minimizing the linear term of the expected cost.
    OptimalM {
        #[arg(long)]
        measure: Measure,
        #[arg(long, default_value_t = 100)]
        max_m: usize,
    },
    /// Extra bytecode cost of cutoff --m-b relative to cutoff --m-a.
    Savings {
        #[arg(long, default_value_t = 7)]
        m_a: usize,
        #[arg(long, default_value_t = 1)]
        m_b: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 20, 100, 1_000, 10_000])]
        sizes: Vec<usize>,
    },
    /// Leading terms next to classic Quicksort reference values.
    Summary {
        #[arg(long, default_value_t = 7)]
        m_dual: usize,
        #[arg(long, default_value_t = 6)]
        m_classic: usize,
    },
}

fn config_error(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

/// `--out`, else `$DUALPIVOT_OUT_DIR/<default_name>`, else standard output.
fn output_target(out: Option<PathBuf>, default_name: &str) -> Option<PathBuf> {
    out.or_else(|| std::env::var_os(OUT_DIR_VAR).map(|dir| Path::new(&dir).join(default_name)))
}

fn emit<F>(target: Option<PathBuf>, write: F) -> Result<(), HarnessError>
where
    F: FnOnce(Box<dyn Write>) -> csv::Result<()>,
{
    match target {
        Some(path) => write_file(&path, |file| write(Box::new(file))),
        None => write(Box::new(io::stdout().lock()))
            .map_err(|e| HarnessError::Io { path: PathBuf::from("<stdout>"), source: e.into() }),
    }
}

fn sort(keys: Option<Vec<i64>>, n: usize, m: usize, seed: u64, steps: bool) -> Result<(), HarnessError> {
    if m == 0 {
        return Err(config_error("cutoff must be at least 1"));
    }
    let mut keys = keys.unwrap_or_else(|| random_permutation(n, &mut trial_rng(seed, 0, 0)));
    let run = dual_pivot_sort(&mut keys, m, steps);
    let fv = FrequencyVector::from_trace(&run.trace);
    let costs = CostVector::from_trace(&run.trace, &WeightTable::bytecode());
    if keys.len() <= 50 {
        println!("sorted: {keys:?}");
    }
    for f in Frequency::ALL {
        println!("{} = {}", f.name(), fv.get(f));
    }
    for measure in Measure::ALL {
        println!("{measure} = {}", costs.get(measure));
    }
    for (i, s) in run.steps.iter().flatten().enumerate() {
        println!(
            "step {i}: len {} P {} Q {} delta {} c1 {} c3 {} c4 {} s1 {} s3 {}",
            s.len, s.small_pivot_rank, s.large_pivot_rank, s.overshoot, s.c1, s.c3, s.c4, s.s1, s.s3
        );
    }
    Ok(())
}

fn predict(measure: Measure, m: usize, n: usize, mode: PredictMode) -> Result<(), HarnessError> {
    let value: f64 = match mode {
        PredictMode::Exact => dualpivot_harness::exact_expectation(measure, m, n)?,
        PredictMode::Recurrence => expected_cost(measure, m, n, EvalMode::Recurrence)?,
        PredictMode::Asymptotic => {
            if m == 0 {
                return Err(config_error("cutoff must be at least 1"));
            }
            let e = asymptotic_expansion(measure, m);
            println!(
                "{measure}, M={m}: {} n ln n {:+} n {:+} ln n {:+}",
                e.n_ln_n, e.n, e.ln_n, e.constant
            );
            e.eval(n)
        }
    };
    println!("{value}");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn distribution(
    measure: Measure,
    m: usize,
    n: usize,
    mode: DistributionMode,
    depth: usize,
    samples: usize,
    bins: Option<usize>,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<(), HarnessError> {
    if m == 0 {
        return Err(config_error("cutoff must be at least 1"));
    }
    let target = output_target(out, "distribution.csv");
    let values: Vec<f64> = match mode {
        DistributionMode::Exact => {
            let pmf = exact_distribution(measure, m, n)?;
            eprintln!("mean {}, variance {}", pmf.mean(), pmf.variance());
            return emit(target, |w| write_pmf_csv(&pmf, w));
        }
        DistributionMode::Montecarlo => {
            let weights = WeightTable::bytecode();
            (0..samples as u64)
                .map(|trial| {
                    let mut keys = random_permutation(n, &mut trial_rng(seed, 0, trial));
                    let run = dual_pivot_sort(&mut keys, m, false);
                    normalize::<f64>(CostVector::from_trace(&run.trace, &weights).get(measure), n, measure, m)
                })
                .collect()
        }
        DistributionMode::Fixpoint => {
            let mut pool = FixedPointPool::new(measure, samples)?;
            pool.advance_to(depth, &mut ChaCha8Rng::seed_from_u64(seed));
            pool.into_samples()
        }
    };
    let stats = RunningStats::from_samples(&values);
    eprintln!(
        "samples {}, mean {}, variance {}",
        stats.count(),
        stats.mean().unwrap_or(f64::NAN),
        stats.variance().unwrap_or(f64::NAN)
    );
    let histogram = Histogram::from_samples(&values, bins).ok_or_else(|| config_error("no samples"))?;
    emit(target, |w| write_histogram_csv(&histogram, w))
}

fn constants() -> Result<(), HarnessError> {
    let exact = LimitConstants::closed_form();
    let numeric = LimitConstants::by_quadrature().map_err(dualpivot::distribution::DistributionError::from)?;
    println!("{:<18}{:>20}{:>20}", "constant", "closed form", "quadrature");
    for (name, a, b) in [
        ("var cmps", exact.sigma2_cmps, numeric.sigma2_cmps),
        ("var swaps", exact.sigma2_swaps, numeric.sigma2_swaps),
        ("var bytecodes", exact.sigma2_bytecodes, numeric.sigma2_bytecodes),
        ("cov cmps swaps", exact.cov_cmps_swaps, numeric.cov_cmps_swaps),
        ("corr cmps swaps", exact.correlation, numeric.correlation),
    ] {
        println!("{name:<18}{a:>20.12}{b:>20.12}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), HarnessError> {
    match cli.command {
        Command::Sort { keys, n, m, seed, steps } => sort(keys, n, m, seed, steps),
        Command::Predict { measure, m, n, mode } => predict(measure, m, n, mode),
        Command::Experiment { sizes, trials, m, seed, measures, out } => {
            let config = ExperimentConfig { sizes, trials, cutoff: m, seed, measures, output: out };
            config.validate()?;
            let stats = run_experiment(&config)?;
            emit(output_target(config.output.clone(), "experiment.csv"), |w| {
                write_stats_csv(&stats, &config.measures, w)
            })
        }
        Command::Distribution { measure, m, n, mode, depth, samples, bins, seed, out } => {
            distribution(measure, m, n, mode, depth, samples, bins, seed, out)
        }
        Command::Constants => constants(),
        Command::OptimalM { measure, max_m } => {
            if max_m == 0 {
                return Err(config_error("--max-m must be at least 1"));
            }
            let (m, coefficient) = optimal_cutoff(measure, 1..=max_m);
            println!("M = {m}, linear coefficient {coefficient}");
            Ok(())
        }
        Command::Savings { m_a, m_b, sizes } => {
            if m_a == 0 || m_b == 0 {
                return Err(config_error("cutoffs must be at least 1"));
            }
            if let Some(n) = sizes.iter().find(|&&n| n < 2) {
                return Err(config_error(format!("sizes must be at least 2, got {n}")));
            }
            println!("n,savings");
            for (n, s) in savings_curve(m_a, m_b, &sizes)? {
                println!("{n},{s}");
            }
            Ok(())
        }
        Command::Summary { m_dual, m_classic } => {
            if m_dual == 0 {
                return Err(config_error("cutoff must be at least 1"));
            }
            print!("{}", report_summary(m_dual, m_classic));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
