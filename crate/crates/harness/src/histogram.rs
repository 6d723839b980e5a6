/// Equal-width histogram, described by the left edge of the first bin and
/// the common bin width.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    pub left: f64,
    pub width: f64,
    pub counts: Vec<u64>,
}

/// Upper limit on automatically chosen bin counts.
const MAX_AUTO_BINS: usize = 10_000;

fn quantile(sorted: &[f64], p: f64) -> f64 {
    let pos = p * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

impl Histogram {
    /// Bins `samples` into `bins` bins, or by the Freedman-Diaconis rule
    /// (width `2 IQR / n^(1/3)`) when `bins` is `None`. Non-finite samples
    /// are ignored; returns `None` if nothing is left.
    pub fn from_samples(samples: &[f64], bins: Option<usize>) -> Option<Histogram> {
        let mut sorted: Vec<f64> = samples.iter().copied().filter(|x| x.is_finite()).collect();
        if sorted.is_empty() {
            return None;
        }
        sorted.sort_by(f64::total_cmp);
        let (lo, hi) = (sorted[0], sorted[sorted.len() - 1]);
        let range = hi - lo;
        if range == 0.0 {
            let bins = bins.unwrap_or(1).max(1);
            let mut counts = vec![0; bins];
            counts[0] = sorted.len() as u64;
            return Some(Histogram { left: lo, width: 1.0, counts });
        }
        let bins = bins.unwrap_or_else(|| {
            let iqr = quantile(&sorted, 0.75) - quantile(&sorted, 0.25);
            let width = 2.0 * iqr / (sorted.len() as f64).cbrt();
            if width > 0.0 {
                ((range / width).ceil() as usize).clamp(1, MAX_AUTO_BINS)
            } else {
                (sorted.len() as f64).sqrt().ceil() as usize
            }
        });
        let bins = bins.max(1);
        let width = range / bins as f64;
        let mut counts = vec![0u64; bins];
        for x in sorted {
            let i = (((x - lo) / width) as usize).min(bins - 1);
            counts[i] += 1;
        }
        Some(Histogram { left: lo, width, counts })
    }

    pub fn edges(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.counts.len()).map(|i| self.left + i as f64 * self.width)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}
