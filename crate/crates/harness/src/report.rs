use std::fmt::Write;

use dualpivot::analytic::asymptotic_expansion;
use dualpivot::distribution::LimitConstants;
use dualpivot::Measure;

/// Published constants for classic single-pivot Quicksort, used only as
/// reference columns. They refer to cutoff 6 (swaps to cutoff 1).
pub mod classic_reference {
    pub const CUTOFF: usize = 6;
    /// (measure tag, n ln n coefficient, n coefficient)
    pub const EXPECTATIONS: [(&str, f64, f64); 4] = [
        ("cmps", 2.0, -2.3045),
        ("swaps", 1.0 / 3.0, -0.585373),
        ("writes", 2.0 / 3.0, 0.316953),
        ("bytecodes", 18.0, 6.21488),
    ];
    /// (measure tag, standard deviation coefficient of n)
    pub const STD_DEVS: [(&str, f64); 3] = [("cmps", 0.648278), ("swaps", 0.0237251), ("bytecodes", 3.52723)];
    pub const CORRELATION_CMPS_SWAPS: f64 = -0.86404;
}

/// Six significant digits, trailing zeros dropped.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let decimals = (5 - x.abs().log10().floor() as i32).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `"a n ln n - b n"` with six significant digits.
pub fn leading_terms(n_ln_n: f64, n: f64) -> String {
    let sign = if n < 0.0 { '-' } else { '+' };
    format!("{} n ln n {sign} {} n", sig6(n_ln_n), sig6(n.abs()))
}

/// Leading terms of the expected costs and the limit standard deviations
/// of the dual-pivot sort at cutoff `m_dual`, next to reference values for
/// classic Quicksort. Swaps are shown at cutoff 1, since Insertionsort does
/// not swap.
pub fn report_summary(m_dual: usize, m_classic: usize) -> String {
    let limits = LimitConstants::closed_form();
    let classic_note = if m_classic == classic_reference::CUTOFF {
        format!("reference, M={m_classic}")
    } else {
        format!("reference for M={} only, requested M={m_classic}", classic_reference::CUTOFF)
    };
    let mut out = String::new();
    let dual_heading = format!("dual-pivot (M={m_dual})");
    let _ = writeln!(out, "{:<22}{dual_heading:<34}classic ({classic_note})", "measure");
    for m in Measure::ALL {
        let cutoff = if m == Measure::Swaps { 1 } else { m_dual };
        let e = asymptotic_expansion(m, cutoff);
        let (_, c, d) = classic_reference::EXPECTATIONS.iter().find(|(t, _, _)| *t == m.tag()).expect("reference row");
        let label = if m == Measure::Swaps { format!("{m} mean (M=1)") } else { format!("{m} mean") };
        let _ = writeln!(out, "{label:<22}{:<34}{}", leading_terms(e.n_ln_n, e.n), leading_terms(*c, *d));
        if let Some(var) = limits.variance(m) {
            let (_, s) = classic_reference::STD_DEVS.iter().find(|(t, _)| *t == m.tag()).expect("reference row");
            let (label, dual) = (format!("{m} std dev"), format!("{} n", sig6(var.sqrt())));
            let _ = writeln!(out, "{label:<22}{dual:<34}{} n", sig6(*s));
        }
    }
    let _ = writeln!(
        out,
        "{:<22}{:<34}{}",
        "corr(cmps, swaps)",
        sig6(limits.correlation),
        sig6(classic_reference::CORRELATION_CMPS_SWAPS)
    );
    out
}
