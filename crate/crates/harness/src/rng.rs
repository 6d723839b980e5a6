use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bits of the stream id reserved for the trial index.
pub const TRIAL_BITS: u32 = 40;

/// Generator for one trial. Every `(size_index, trial)` pair gets its own
/// ChaCha stream under the same key, so draws do not depend on which
/// thread runs the trial or in what order.
pub fn trial_rng(seed: u64, size_index: usize, trial: u64) -> ChaCha8Rng {
    debug_assert!(trial < 1 << TRIAL_BITS);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((size_index as u64) << TRIAL_BITS) | trial);
    rng
}

/// Uniformly random arrangement of `1..=n` (Fisher-Yates).
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<i64> {
    let mut keys: Vec<i64> = (1..=n as i64).collect();
    keys.shuffle(rng);
    keys
}
