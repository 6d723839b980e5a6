use std::collections::BinaryHeap;
use std::cmp::Ordering;

use thiserror::Error;

/// Default absolute tolerance of [`simplex_expectation`].
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

const MAX_INTERVALS: usize = 4000;

// Gauss-Kronrod 7/15 abscissae on [-1, 1] (non-negative half) and weights.
const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, PartialEq, Error)]
#[error("quadrature reached {intervals} intervals with error estimate {estimate:e} above tolerance {tolerance:e}")]
pub struct QuadratureError {
    pub estimate: f64,
    pub tolerance: f64,
    pub intervals: usize,
}

struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> Segment {
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mid = f(centre);
    let mut kronrod = KRONROD_WEIGHTS[7] * mid;
    let mut gauss = GAUSS_WEIGHTS[3] * mid;
    for i in 0..7 {
        let dx = half * KRONROD_NODES[i];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += KRONROD_WEIGHTS[i] * pair;
        if i % 2 == 1 {
            gauss += GAUSS_WEIGHTS[i / 2] * pair;
        }
    }
    Segment { lo, hi, value: kronrod * half, error: ((kronrod - gauss) * half).abs() }
}

/// Globally adaptive Gauss-Kronrod integral of `f` over `[lo, hi]` to
/// absolute `tolerance`. Endpoints are never evaluated.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tolerance: f64) -> Result<f64, QuadratureError> {
    if hi <= lo {
        return Ok(0.0);
    }
    let mut heap = BinaryHeap::new();
    let first = kronrod(&mut f, lo, hi);
    let mut error = first.error;
    heap.push(first);
    // Written so that a NaN estimate keeps refining and ends in an error.
    while error.is_nan() || error > tolerance {
        if heap.len() >= MAX_INTERVALS || !error.is_finite() && heap.len() > 1 {
            return Err(QuadratureError { estimate: error, tolerance, intervals: heap.len() });
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.lo + worst.hi);
        let left = kronrod(&mut f, worst.lo, mid);
        let right = kronrod(&mut f, mid, worst.hi);
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // The running sum drifts; refresh it now and then.
        if heap.len() % 64 == 0 {
            error = heap.iter().map(|s| s.error).sum();
        }
    }
    Ok(heap.iter().map(|s| s.value).sum())
}

/// `E[g(D1, D2, D3)]` for spacings uniform on the 2-simplex (density 2),
/// by nested adaptive quadrature.
pub fn simplex_expectation<G: Fn(f64, f64, f64) -> f64>(g: G, tolerance: f64) -> Result<f64, QuadratureError> {
    let inner_tolerance = tolerance * 0.05;
    let mut failure = None;
    let outer = integrate(
        |x1| {
            let span = 1.0 - x1;
            match integrate(|x2| g(x1, x2, (span - x2).max(0.0)), 0.0, span, inner_tolerance) {
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            }
        },
        0.0,
        1.0,
        tolerance * 0.25,
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(2.0 * outer),
    }
}
