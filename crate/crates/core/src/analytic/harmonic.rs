use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::EULER_GAMMA;

/// `H_n = 1 + 1/2 + ... + 1/n` exactly; `H_0 = 0`.
pub fn harmonic(n: usize) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, i| acc + BigRational::new(BigInt::from(1), BigInt::from(i)))
}

/// `H_n` in double precision, to within a few ulps.
pub fn harmonic_f64(n: usize) -> f64 {
    if n <= 1000 {
        // Smallest terms first.
        (1..=n).rev().map(|i| 1.0 / i as f64).sum()
    } else {
        let x = n as f64;
        let inv2 = 1.0 / (x * x);
        x.ln() + EULER_GAMMA + 0.5 / x
            - inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)))
    }
}

/// The three-term estimate `ln n + gamma + 1/(2n)`, off by `O(n^-2)`.
///
/// # Panics
/// If `n` is 0.
pub fn harmonic_asymptotic(n: usize) -> f64 {
    assert!(n > 0, "asymptotic harmonic number needs n >= 1");
    let x = n as f64;
    x.ln() + EULER_GAMMA + 0.5 / x
}
