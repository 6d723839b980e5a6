use std::fs::File;
use std::io::Write;
use std::path::Path;

use dualpivot::distribution::Pmf;
use dualpivot::Measure;

use crate::histogram::Histogram;
use crate::stats::SampleStats;
use crate::HarnessError;

fn cell(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// Experiment rows: `n` then, per measure, sample mean and variance,
/// predicted mean and variance, and the standard error of the mean.
/// Undefined values are left empty.
pub fn write_stats_csv<W: Write>(stats: &[SampleStats], measures: &[Measure], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n".to_string()];
    for m in measures {
        for prefix in ["mean", "var", "pred_mean", "pred_var", "se_mean"] {
            header.push(format!("{prefix}_{}", m.tag()));
        }
    }
    w.write_record(&header)?;
    for row in stats {
        let mut record = vec![row.n.to_string()];
        for &m in measures {
            match row.get(m) {
                Some(s) => record.extend([
                    s.mean.to_string(),
                    cell(s.variance),
                    s.predicted_mean.to_string(),
                    cell(s.predicted_variance),
                    cell(s.se_mean),
                ]),
                None => record.extend(std::iter::repeat_n(String::new(), 5)),
            }
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// One row per support value, with the probability as a reduced fraction.
pub fn write_pmf_csv<W: Write>(pmf: &Pmf, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["value", "probability_numerator", "probability_denominator"])?;
    for (value, p) in pmf.entries() {
        w.write_record([value.to_string(), p.numer().to_string(), p.denom().to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_histogram_csv<W: Write>(histogram: &Histogram, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["left_edge", "width", "count"])?;
    for (edge, count) in histogram.edges().zip(&histogram.counts) {
        w.write_record([edge.to_string(), histogram.width.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Creates `path` and hands it to `write`, attaching the path to any error.
pub fn write_file<F>(path: &Path, write: F) -> Result<(), HarnessError>
where
    F: FnOnce(File) -> csv::Result<()>,
{
    let io_error = |source| HarnessError::Io { path: path.to_path_buf(), source };
    let file = File::create(path).map_err(io_error)?;
    write(file).map_err(|e| io_error(e.into()))
}
