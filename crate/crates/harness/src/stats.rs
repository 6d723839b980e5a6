use dualpivot::Measure;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Exact running moments of integer samples. Merging is exact, so any
/// grouping or order of partial results gives identical output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerMoments {
    count: u64,
    sum: u128,
    sum_sq: u128,
}

impl IntegerMoments {
    pub fn push(&mut self, x: u64) {
        self.count += 1;
        self.sum += x as u128;
        self.sum_sq += (x as u128) * (x as u128);
    }

    pub fn merge(&mut self, other: &IntegerMoments) {
        self.count += other.count;
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn exact_mean(&self) -> Option<BigRational> {
        (self.count > 0).then(|| BigRational::new(BigInt::from(self.sum), BigInt::from(self.count)))
    }

    /// Unbiased sample variance, exact.
    pub fn exact_variance(&self) -> Option<BigRational> {
        if self.count < 2 {
            return None;
        }
        let n = BigInt::from(self.count);
        let sum = BigInt::from(self.sum);
        let numerator = &n * BigInt::from(self.sum_sq) - &sum * &sum;
        Some(BigRational::new(numerator, &n * (&n - 1)))
    }

    pub fn mean(&self) -> Option<f64> {
        self.exact_mean().and_then(|m| m.to_f64())
    }

    pub fn variance(&self) -> Option<f64> {
        self.exact_variance().and_then(|v| v.to_f64())
    }
}

/// Streaming mean and variance of real samples (Welford), with the
/// pairwise merge of Chan et al. for combining partial results.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RunningStats {
    count: u64,
    mean: f64,
    m2: f64,
}

impl RunningStats {
    pub fn from_samples(samples: &[f64]) -> Self {
        let mut stats = RunningStats::default();
        samples.iter().for_each(|&x| stats.push(x));
        stats
    }

    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&mut self, other: &RunningStats) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        let weight = other.count as f64 / total as f64;
        self.mean += delta * weight;
        self.m2 += other.m2 + delta * delta * self.count as f64 * weight;
        self.count = total;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> Option<f64> {
        (self.count > 0).then_some(self.mean)
    }

    pub fn variance(&self) -> Option<f64> {
        (self.count > 1).then(|| self.m2 / (self.count - 1) as f64)
    }

    pub fn std_error(&self) -> Option<f64> {
        self.variance().map(|v| (v / self.count as f64).sqrt())
    }
}

/// Sample summary and prediction for one measure at one size.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureStats {
    pub measure: Measure,
    pub mean: f64,
    /// `None` with fewer than two trials.
    pub variance: Option<f64>,
    pub predicted_mean: f64,
    /// `sigma^2 n^2`; `None` for measures without a known limit law.
    pub predicted_variance: Option<f64>,
    pub se_mean: Option<f64>,
}

impl MeasureStats {
    pub fn new(measure: Measure, moments: &IntegerMoments, predicted_mean: f64, predicted_variance: Option<f64>) -> Self {
        let variance = moments.variance();
        MeasureStats {
            measure,
            mean: moments.mean().unwrap_or(f64::NAN),
            variance,
            predicted_mean,
            predicted_variance,
            se_mean: variance.map(|v| (v / moments.count() as f64).sqrt()),
        }
    }

    /// Distance of the sample mean from the prediction in standard errors.
    pub fn z_score(&self) -> Option<f64> {
        self.se_mean.map(|se| (self.mean - self.predicted_mean) / se)
    }
}

/// Results for one input size.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleStats {
    pub n: usize,
    pub trials: u64,
    pub measures: Vec<MeasureStats>,
}

impl SampleStats {
    pub fn get(&self, measure: Measure) -> Option<&MeasureStats> {
        self.measures.iter().find(|m| m.measure == measure)
    }
}
