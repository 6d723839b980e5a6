//! Limit laws and exact small-size distributions of the sorting costs.
//!
//! Normalized costs `(C_n - E[C_n]) / n` converge to the solution of
//! `X = D1 X1 + D2 X2 + D3 X3 + b(D)`, where `D` are the spacings cut from
//! `[0, 1]` by two uniform points and `X1..X3` are independent copies of `X`.

mod exact;
mod fixpoint;
mod hypergeometric;
mod limit;
mod quadrature;

pub use exact::{all_permutations, exact_distribution, normalize, Pmf, MAX_EXACT_SIZE};
pub use fixpoint::{sample_fixed_point, FixedPointPool, PRUNE_WEIGHT};
pub use hypergeometric::{hypergeometric_moments, hypergeometric_pmf};
pub use limit::{
    covariance_by_quadrature, variance_by_quadrature, x_ln_x, FixPointCoefficient, LimitConstants, Spacings,
};
pub use quadrature::{integrate, simplex_expectation, QuadratureError, DEFAULT_TOLERANCE};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DistributionError {
    #[error("hypergeometric parameters out of range: draws {draws}, red {red}, total {total}")]
    Domain { draws: u64, red: u64, total: u64 },
    #[error("spacings ({0}, {1}, {2}) are not a point of the simplex")]
    NotOnSimplex(f64, f64, f64),
    #[error("exact distributions are limited to n <= {max}, got {n}")]
    SizeCap { n: usize, max: usize },
    #[error("no limit law is known for {0}")]
    NoLimitLaw(crate::Measure),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}
