use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;

use super::DistributionError;

fn check(draws: u64, red: u64, total: u64) -> Result<(), DistributionError> {
    if draws > total || red > total {
        return Err(DistributionError::Domain { draws, red, total });
    }
    Ok(())
}

fn choose(n: u64, k: u64) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `P(X = j)` for `X ~ HypG(draws, red, total)`: red balls among `draws`
/// taken without replacement from an urn of `total` holding `red` red ones.
pub fn hypergeometric_pmf(draws: u64, red: u64, total: u64, j: u64) -> Result<BigRational, DistributionError> {
    check(draws, red, total)?;
    if j > draws || j > red {
        return Ok(BigRational::zero());
    }
    let numer = choose(red, j) * choose(total - red, draws - j);
    Ok(BigRational::new(numer, choose(total, draws)))
}

/// Mean `k r / N` and variance `k r (N-r)(N-k) / (N^2 (N-1))`.
pub fn hypergeometric_moments(draws: u64, red: u64, total: u64) -> Result<(BigRational, BigRational), DistributionError> {
    check(draws, red, total)?;
    if total == 0 {
        return Ok((BigRational::zero(), BigRational::zero()));
    }
    let (k, r, n) = (BigInt::from(draws), BigInt::from(red), BigInt::from(total));
    let mean = BigRational::new(&k * &r, n.clone());
    let variance = if total == 1 {
        BigRational::zero()
    } else {
        BigRational::new(&k * &r * (&n - &r) * (&n - &k), &n * &n * (&n - 1))
    };
    Ok((mean, variance))
}
