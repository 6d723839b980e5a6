use dualpivot::analytic::{expected_cost, AnalyticError, EvalMode};
use dualpivot::distribution::LimitConstants;
use dualpivot::Measure;

/// Exact expected cost as `f64`: the closed form where it applies and the
/// recurrence for the few sizes below its range.
pub fn exact_expectation(measure: Measure, cutoff: usize, n: usize) -> Result<f64, AnalyticError> {
    match expected_cost(measure, cutoff, n, EvalMode::ClosedForm) {
        Err(AnalyticError::OutOfPublishedRange { .. }) => expected_cost(measure, cutoff, n, EvalMode::Recurrence),
        other => other,
    }
}

/// Leading-order variance `sigma^2 n^2` from the limit law.
pub fn predicted_variance(measure: Measure, n: usize) -> Option<f64> {
    LimitConstants::closed_form().variance(measure).map(|s| s * (n as f64).powi(2))
}

/// Relative extra bytecode cost of cutoff `m_b` over cutoff `m_a`,
/// `E[BC | m_b] / E[BC | m_a] - 1`, for each size.
pub fn savings_curve(m_a: usize, m_b: usize, sizes: &[usize]) -> Result<Vec<(usize, f64)>, AnalyticError> {
    sizes
        .iter()
        .map(|&n| {
            let a = exact_expectation(Measure::Bytecodes, m_a, n)?;
            let b = exact_expectation(Measure::Bytecodes, m_b, n)?;
            Ok((n, b / a - 1.0))
        })
        .collect()
}
