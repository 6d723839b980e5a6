use super::Scalar;

/// Solves the dual-pivot recurrence for `E[C_0..=n_max]`:
///
/// * `E[C_n] = base(n)` for `n <= cutoff`,
/// * `E[C_n] = toll(n) + 6/(n(n-1)) * sum_{k=0}^{n-2} (n-k-1) E[C_k]` otherwise.
///
/// Runs in `O(n_max)` by keeping `sum E[C_k]` and `sum k E[C_k]`.
pub fn solve_recurrence<T: Scalar>(
    toll: impl Fn(usize) -> T,
    base: impl Fn(usize) -> T,
    cutoff: usize,
    n_max: usize,
) -> Vec<T> {
    let mut values: Vec<T> = Vec::with_capacity(n_max + 1);
    let mut sum = T::zero();
    let mut weighted = T::zero();
    for n in 0..=n_max {
        let value = if n <= cutoff {
            base(n)
        } else {
            // sum_{k<=n-2} (n-1-k) E[C_k] = (n-1) * sum - weighted
            let n1 = T::from_int(n as i128 - 1);
            let inner = n1.clone() * sum.clone() - weighted.clone();
            toll(n) + T::from_int(6) * inner / (T::from_int(n as i128) * n1)
        };
        if n >= 1 {
            let k = n - 1;
            sum = sum + values[k].clone();
            weighted = weighted + T::from_int(k as i128) * values[k].clone();
        }
        values.push(value);
    }
    values
}
