use rand::Rng;

use super::limit::{FixPointCoefficient, Spacings};
use super::DistributionError;
use crate::Measure;

/// Subtrees whose path weight (product of spacings from the root) drops
/// below this are cut off in [`sample_fixed_point`]. The discarded part has
/// `L2` norm at most `sqrt(PRUNE_WEIGHT)` limit standard deviations.
pub const PRUNE_WEIGHT: f64 = 1e-6;

fn spacings<R: Rng + ?Sized>(rng: &mut R) -> Spacings {
    Spacings::from_uniforms(rng.gen::<f64>(), rng.gen::<f64>())
}

fn coefficient(measure: Measure) -> Result<FixPointCoefficient, DistributionError> {
    FixPointCoefficient::new(measure).ok_or(DistributionError::NoLimitLaw(measure))
}

/// One draw of the fixed-point expansion truncated after `depth` levels,
/// with independent subtrees and `X := 0` below the last level.
///
/// The cost grows like `3^depth` until pruning (see [`PRUNE_WEIGHT`]) takes
/// over, so this suits modest depths or few samples. [`FixedPointPool`] is
/// the bulk alternative.
pub fn sample_fixed_point<R: Rng + ?Sized>(measure: Measure, depth: usize, rng: &mut R) -> Result<f64, DistributionError> {
    let b = coefficient(measure)?;
    let mut total = 0.0;
    // (remaining depth, path weight)
    let mut pending = vec![(depth, 1.0f64)];
    while let Some((remaining, weight)) = pending.pop() {
        if remaining == 0 || weight < PRUNE_WEIGHT {
            continue;
        }
        let d = spacings(rng);
        total += weight * b.eval(&d);
        for part in [d.d1, d.d2, d.d3] {
            pending.push((remaining - 1, weight * part));
        }
    }
    Ok(total)
}

/// Population of approximate draws at a common truncation depth.
///
/// Going one level deeper replaces every member by `b(D) + sum D_j Y_j`,
/// with fresh spacings `D` and `Y_j` picked at random from the current
/// population. Members are nearly independent for large populations; each
/// has the law of the depth-`d` truncation up to `O(1/size)` reuse effects.
///
/// Since `D1 + D2 + D3 = 1`, a sampling error in the pool mean would carry
/// over undamped from level to level. The exact mean is 0 at every depth,
/// so the previous level is shifted to mean 0 before it is reused. The
/// current members are left as drawn.
#[derive(Clone, Debug)]
pub struct FixedPointPool {
    coefficient: FixPointCoefficient,
    depth: usize,
    members: Vec<f64>,
}

impl FixedPointPool {
    /// A pool of `size` zeros (depth 0).
    pub fn new(measure: Measure, size: usize) -> Result<Self, DistributionError> {
        Ok(FixedPointPool { coefficient: coefficient(measure)?, depth: 0, members: vec![0.0; size] })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn samples(&self) -> &[f64] {
        &self.members
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.members
    }

    /// Moves every member one level deeper.
    pub fn advance<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        let size = self.members.len();
        if size == 0 {
            self.depth += 1;
            return;
        }
        let previous = std::mem::take(&mut self.members);
        let drift = previous.iter().sum::<f64>() / size as f64;
        self.members = (0..size)
            .map(|_| {
                let d = spacings(rng);
                let mut value = self.coefficient.eval(&d);
                for part in [d.d1, d.d2, d.d3] {
                    value += part * (previous[rng.gen_range(0..size)] - drift);
                }
                value
            })
            .collect();
        self.depth += 1;
    }

    pub fn advance_to<R: Rng + ?Sized>(&mut self, depth: usize, rng: &mut R) {
        while self.depth < depth {
            self.advance(rng);
        }
    }
}
