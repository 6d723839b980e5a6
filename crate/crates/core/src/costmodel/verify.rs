use std::fmt;

use crate::sortcore::PartitionStepRecord;

/// Identities every partitioning step on distinct keys satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepIdentity {
    /// `k = Q + δ` when the loop exits.
    KAtExit,
    /// `g = Q - 1` when the loop exits.
    GAtExit,
    /// `ℓ = P + 1` when the loop exits.
    LAtExit,
    /// `δ = 1` exactly when the key first stored at position `Q` exceeds `q`.
    OvershootWitness,
    C1,
    C3,
    C4,
    S1,
    S3,
    F,
}

impl fmt::Display for StepIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            StepIdentity::KAtExit => "k = Q + delta",
            StepIdentity::GAtExit => "g = Q - 1",
            StepIdentity::LAtExit => "l = P + 1",
            StepIdentity::OvershootWitness => "delta = [initial A[Q] > q]",
            StepIdentity::C1 => "c1 = Q - 2 + delta",
            StepIdentity::C3 => "c3 = n - Q",
            StepIdentity::C4 => "c4 = delta + sm@G",
            StepIdentity::S1 => "s1 = s@K",
            StepIdentity::S3 => "s3 = P - 1 - s@K",
            StepIdentity::F => "f = delta",
        };
        f.write_str(text)
    }
}

/// One identity that did not hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepViolation {
    pub identity: StepIdentity,
    pub expected: i64,
    pub actual: i64,
}

impl fmt::Display for StepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, got {}", self.identity, self.expected, self.actual)
    }
}

/// Checks a step record; an empty result means every identity holds.
pub fn verify_step(record: &PartitionStepRecord) -> Vec<StepViolation> {
    let n = record.len as i64;
    let p = record.small_pivot_rank as i64;
    let q = record.large_pivot_rank as i64;
    let delta = record.overshoot as i64;
    let small_k = record.small_in_k_range as i64;
    let checks = [
        (StepIdentity::KAtExit, q + delta, record.k_exit as i64),
        (StepIdentity::GAtExit, q - 1, record.g_exit as i64),
        (StepIdentity::LAtExit, p + 1, record.l_exit as i64),
        (
            StepIdentity::OvershootWitness,
            record.initial_at_large_rank_exceeds_large_pivot as i64,
            delta,
        ),
        (StepIdentity::C1, q - 2 + delta, record.c1 as i64),
        (StepIdentity::C3, n - q, record.c3 as i64),
        (StepIdentity::C4, delta + record.small_or_medium_in_g_range as i64, record.c4 as i64),
        (StepIdentity::S1, small_k, record.s1 as i64),
        (StepIdentity::S3, p - 1 - small_k, record.s3 as i64),
        (StepIdentity::F, delta, record.f as i64),
    ];
    checks
        .into_iter()
        .filter(|(_, expected, actual)| expected != actual)
        .map(|(identity, expected, actual)| StepViolation { identity, expected, actual })
        .collect()
}
