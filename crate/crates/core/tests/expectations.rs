use dualpivot::analytic::{
    asymptotic_expansion, bootstrap_values, closed_form, closed_form_leading, cost_formula, expected_cost,
    expected_frequency, frequency_formula, insertionsort_frequencies, linear_coefficient, optimal_cutoff, rational,
    solve_recurrence, folded_bytecode_toll, AnalyticError, ClosedFormSolution, EvalMode, ExpectationTable,
    LeadingFormula, LinearToll, Quantity, Scalar, EULER_GAMMA,
};
use dualpivot::costmodel::{Frequency, WeightTable};
use dualpivot::distribution::all_permutations;
use dualpivot::sortcore::dual_pivot_sort;
use dualpivot::{CostVector, FrequencyVector, Measure};
use num_rational::BigRational;

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1.0)
}

#[test]
fn exhaustive_means_equal_recurrence() {
    let weights = WeightTable::bytecode();
    for cutoff in 1..=3 {
        let freq_tables: Vec<Vec<BigRational>> =
            Frequency::ALL.iter().map(|f| LinearToll::for_frequency(*f).solve(cutoff, 8)).collect();
        let cost_tables: Vec<Vec<BigRational>> =
            Measure::ALL.iter().map(|m| LinearToll::for_measure(*m).solve(cutoff, 8)).collect();
        for n in 0..=8usize {
            let mut freq_sums = [0i64; 13];
            let mut cost_sums = [0i64; 4];
            let mut runs = 0i64;
            for mut keys in all_permutations(n) {
                let trace = dual_pivot_sort(&mut keys, cutoff, false).trace;
                let fv = FrequencyVector::from_trace(&trace);
                for (sum, f) in freq_sums.iter_mut().zip(Frequency::ALL) {
                    *sum += fv.get(f) as i64;
                }
                let costs = CostVector::from_trace(&trace, &weights);
                for (sum, m) in cost_sums.iter_mut().zip(Measure::ALL) {
                    *sum += costs.get(m) as i64;
                }
                runs += 1;
            }
            for (i, f) in Frequency::ALL.iter().enumerate() {
                assert_eq!(rational(freq_sums[i], runs), freq_tables[i][n], "{f}, M = {cutoff}, n = {n}");
            }
            for (i, m) in Measure::ALL.iter().enumerate() {
                assert_eq!(rational(cost_sums[i], runs), cost_tables[i][n], "{m}, M = {cutoff}, n = {n}");
            }
        }
    }
}

#[test]
fn spot_values() {
    let c = LinearToll::for_measure(Measure::Comparisons).solve::<BigRational>(1, 4);
    let s = LinearToll::for_measure(Measure::Swaps).solve::<BigRational>(1, 4);
    let bc = LinearToll::for_measure(Measure::Bytecodes).solve::<BigRational>(1, 4);
    assert_eq!(c[4], rational(65, 12));
    assert_eq!(s[4], rational(25, 6));
    assert_eq!(bc[2], rational(189, 2));
    assert_eq!(bc[4], rational(1097, 6));
}

#[test]
fn bytecode_frequency_assembly_at_four() {
    let total = [
        (Frequency::A, 71),
        (Frequency::B, -1),
        (Frequency::R, 6),
        (Frequency::C1, 15),
        (Frequency::C3, 10),
        (Frequency::C4, 11),
        (Frequency::S1, 9),
        (Frequency::S3, 8),
        (Frequency::F, 3),
    ]
    .into_iter()
    .map(|(f, w)| expected_frequency::<BigRational>(f, 1, 4, EvalMode::ClosedForm).unwrap() * rational(w, 1))
    .fold(rational(0, 1), |acc, x| acc + x);
    assert_eq!(total, rational(1097, 6));
}

#[test]
fn folded_toll_with_zero_base_overcounts() {
    let folded = folded_bytecode_toll();
    let wrong = solve_recurrence(|n| folded.at::<BigRational>(n), |_| rational(0, 1), 1, 60);
    let right = LinearToll::for_measure(Measure::Bytecodes).solve::<BigRational>(1, 60);
    let steps = LinearToll::for_frequency(Frequency::A).solve::<BigRational>(1, 60);
    assert_eq!(wrong[4], rational(1115, 6));
    for n in 2..=60 {
        assert_eq!(&wrong[n] - &right[n], (&steps[n] - rational(1, 1)) * rational(6, 1), "n = {n}");
    }
}

#[test]
fn closed_form_examples() {
    let unit = LinearToll::new(rational(0, 1), rational(1, 1), rational(1, 1));
    assert_eq!(closed_form(&unit, 1, (rational(0, 1), rational(0, 1)), 4).unwrap(), rational(3, 2));
    // The comparisons toll has special value 1, outside the generic shape at M = 1.
    let cmps = LinearToll::new(rational(19, 12), rational(-17, 12), rational(1, 1));
    assert!(closed_form::<BigRational>(&cmps, 1, (rational(0, 1), rational(0, 1)), 4).is_err());
    assert_eq!(cost_formula(Measure::Comparisons, 1).unwrap().eval::<BigRational>(4), rational(65, 12));
    for (a, b) in [(3, -7), (0, 5), (-2, 11)] {
        let toll = LinearToll::new(rational(a, 5), rational(b, 3), rational(17, 4));
        let dp = toll.solve::<BigRational>(2, 5);
        let boot: (BigRational, BigRational) = bootstrap_values(&toll, 2);
        assert_eq!(closed_form(&toll, 2, boot, 5).unwrap(), dp[5]);
    }
}

#[test]
fn closed_form_rejects_unsupported_special_value() {
    let toll = LinearToll::new(rational(1, 1), rational(1, 1), rational(5, 1));
    let err = closed_form::<BigRational>(&toll, 1, (rational(0, 1), rational(0, 1)), 10).unwrap_err();
    assert!(matches!(err, AnalyticError::TollShapeMismatch { .. }));
    // Either admissible special value works.
    for special in [rational(0, 1), rational(3, 1)] {
        let toll = LinearToll::new(rational(1, 1), rational(1, 1), special);
        let dp = toll.solve::<BigRational>(1, 20);
        let boot: (BigRational, BigRational) = bootstrap_values(&toll, 1);
        assert_eq!(closed_form(&toll, 1, boot, 20).unwrap(), dp[20]);
    }
}

#[test]
fn closed_forms_match_recurrence_exactly() {
    let quantities: Vec<Quantity> = Frequency::ALL
        .iter()
        .map(|f| Quantity::Frequency(*f))
        .chain(Measure::ALL.iter().map(|m| Quantity::Cost(*m)))
        .collect();
    for cutoff in [1usize, 2, 3, 5, 7] {
        for q in &quantities {
            let dp = ExpectationTable::new(*q, cutoff, EvalMode::Recurrence).tabulate::<BigRational>(200).unwrap();
            let table = ExpectationTable::new(*q, cutoff, EvalMode::ClosedForm);
            let min = if cutoff == 1 { 4 } else { cutoff + 3 };
            for n in (min..=40).chain([97, 200]) {
                assert_eq!(table.eval::<BigRational>(n).unwrap(), dp[n], "{q}, M = {cutoff}, n = {n}");
            }
            if cutoff >= 1 {
                assert!(table.eval::<BigRational>(min - 1).is_err());
            }
        }
    }
}

#[test]
fn float_closed_forms_match_recurrence_to_large_n() {
    for cutoff in [1usize, 2, 5, 7, 46] {
        for m in Measure::ALL {
            let dp = ExpectationTable::new(Quantity::Cost(m), cutoff, EvalMode::Recurrence).tabulate::<f64>(10_000).unwrap();
            let min = if cutoff == 1 { 4 } else { cutoff + 3 };
            for n in (min..=10_000).step_by(37).chain([10_000]) {
                let cf = expected_cost::<f64>(m, cutoff, n, EvalMode::ClosedForm).unwrap();
                assert!(close(cf, dp[n], 1e-9), "{m}, M = {cutoff}, n = {n}: {cf} vs {}", dp[n]);
            }
        }
    }
}

#[test]
fn stated_cost_formulas_are_the_assembled_solutions() {
    for cutoff in 2..=60 {
        for m in Measure::ALL {
            let stated = cost_formula(m, cutoff).unwrap();
            let assembled = LeadingFormula::from_toll(&LinearToll::for_measure(m), cutoff).unwrap();
            assert_eq!(stated, assembled, "{m}, M = {cutoff}");
        }
    }
    for m in Measure::ALL {
        let stated = cost_formula(m, 1).unwrap();
        let dp = LinearToll::for_measure(m).solve::<BigRational>(1, 60);
        for n in 4..=60 {
            assert_eq!(stated.eval::<BigRational>(n), dp[n], "{m}, n = {n}");
        }
    }
}

#[test]
fn frequency_rows_without_remainder_at_thousand() {
    for cutoff in [2usize, 3, 5, 7, 20] {
        for f in Frequency::ALL {
            let toll = LinearToll::for_frequency(f);
            let dp = toll.solve::<f64>(cutoff, 1000)[1000];
            let row: f64 = closed_form_leading(&toll, cutoff, 1000).unwrap();
            assert!(close(row, dp, 1e-8), "{f}, M = {cutoff}: {row} vs {dp}");
        }
    }
}

#[test]
fn single_step_frequency_rows() {
    let f = |which, n: i64| frequency_formula(which, 1).unwrap().eval::<BigRational>(n as usize);
    for n in 4..30i64 {
        let h = dualpivot::analytic::harmonic(n as usize);
        let c1 = rational(4, 5) * rational(n + 1, 1) * h - rational(83, 50) * rational(n, 1) - rational(2, 75);
        assert_eq!(f(Frequency::C1, n), c1);
        assert_eq!(f(Frequency::F, n), rational(n, 10) - rational(1, 15));
        assert_eq!(f(Frequency::A, n), rational(2, 5) * rational(n + 1, 1) - rational(1, 2));
        assert_eq!(f(Frequency::R, n), f(Frequency::A, n) * rational(3, 1) + rational(1, 1));
        assert_eq!(f(Frequency::B, n), f(Frequency::A, n) * rational(1, 2));
    }
}

#[test]
fn insertion_sort_rows() {
    for cutoff in 2..=40 {
        let rows = insertionsort_frequencies::<BigRational>(cutoff, 0);
        let leading = |f| frequency_formula(f, cutoff).unwrap();
        for (f, row) in [
            (Frequency::InsertionCalls, rows.calls),
            (Frequency::InsertionOuter, rows.outer),
            (Frequency::InsertionStops, rows.stops),
            (Frequency::InsertionShifts, rows.shifts),
        ] {
            let formula = leading(f);
            assert_eq!(formula.harmonic, rational(0, 1));
            assert_eq!(formula.linear, row, "{f}, M = {cutoff}");
            assert_eq!(formula.constant, rational(0, 1));
        }
    }
}

#[test]
fn linear_coefficients_and_optimal_cutoffs() {
    assert!((linear_coefficient(Measure::Comparisons, 5) + 3.620_24).abs() < 1e-5);
    assert!((linear_coefficient(Measure::Writes, 5) + 1.098_333_333).abs() < 1e-8);
    assert!((linear_coefficient(Measure::Bytecodes, 1) + 9.965).abs() < 1e-12);
    assert!((linear_coefficient(Measure::Bytecodes, 7) + 16.088_7).abs() < 1e-4);
    let (m, v) = optimal_cutoff(Measure::Comparisons, 1..=256);
    assert_eq!(m, 5);
    assert!((v + 3.620_24).abs() < 1e-4);
    let (m, v) = optimal_cutoff(Measure::Writes, 1..=256);
    assert_eq!(m, 5);
    assert!((v + 1.098_33).abs() < 1e-4);
    let (m, v) = optimal_cutoff(Measure::Bytecodes, 1..=256);
    assert_eq!(m, 7);
    assert!((v + 16.088_7).abs() < 1e-4);
}

#[test]
fn linear_coefficient_forms_for_general_cutoff() {
    for cutoff in 2..=50usize {
        let m = cutoff as f64;
        let h1 = f64::harmonic(cutoff + 1);
        let h2 = f64::harmonic(cutoff + 2);
        let cmps = 124.0 / 75.0 + 3.0 * m / 20.0 - 37.0 / (10.0 * (m + 2.0)) - (62.0 + 19.0 * m) / (10.0 * (m + 2.0)) * h1;
        let writes = 86.0 / 75.0 + 3.0 * m / 20.0 - 26.0 / (5.0 * (m + 2.0)) + 18.0 / (5.0 * (m + 1.0)) - 1.1 * h2;
        assert!(close(linear_coefficient(Measure::Comparisons, cutoff), cmps, 1e-12));
        assert!(close(linear_coefficient(Measure::Writes, cutoff), writes, 1e-12));
    }
}

#[test]
fn large_n_expansions() {
    let e = asymptotic_expansion(Measure::Comparisons, 7);
    assert!((e.n_ln_n - 1.9).abs() < 1e-15 && (e.n + 2.499_76).abs() < 1e-5);
    let e = asymptotic_expansion(Measure::Writes, 7);
    assert!((e.n_ln_n - 1.1).abs() < 1e-15 && (e.n + 0.408_039).abs() < 1e-6);
    let e = asymptotic_expansion(Measure::Bytecodes, 7);
    assert!((e.n_ln_n - 21.7).abs() < 1e-13 && (e.n + 3.563_19).abs() < 1e-5);
    let e = asymptotic_expansion(Measure::Swaps, 1);
    assert!((e.n - (0.6 * EULER_GAMMA - 0.47)).abs() < 1e-15);
    for m in Measure::ALL {
        for cutoff in [1usize, 7] {
            let exact = expected_cost::<f64>(m, cutoff, 1_000_000, EvalMode::ClosedForm).unwrap();
            let approx = expected_cost::<f64>(m, cutoff, 1_000_000, EvalMode::Asymptotic).unwrap();
            assert!((exact - approx).abs() < 1e-4, "{m}, M = {cutoff}: {exact} vs {approx}");
        }
    }
}

#[test]
fn base_free_expansion_constant() {
    // Without base values the expansion constant W predicts the linear term.
    for cutoff in [1usize, 3, 8] {
        for (a, b, special) in [(2, -1, 3), (1, 4, 0)] {
            let toll = LinearToll::new(rational(a, 1), rational(b, 1), rational(special, 1));
            let solution = ClosedFormSolution::new(&toll, cutoff).unwrap();
            let formula = LeadingFormula::from_toll(&toll, cutoff).unwrap().expansion();
            let predicted = 0.76 * a as f64 + solution.asymptotic_constant;
            assert!((formula.n - predicted).abs() < 1e-12, "M = {cutoff}: {} vs {predicted}", formula.n);
            let n = 5000;
            let dp = toll.solve::<f64>(cutoff, n)[n];
            assert!(close(solution.eval::<f64>(n).unwrap(), dp, 1e-10));
        }
    }
}

#[test]
fn expected_costs_increase_with_n() {
    // For large cutoffs insertion sort on M elements can cost more than partitioning M + 1.
    for cutoff in [1usize, 2, 3, 5, 7] {
        for m in Measure::ALL {
            let v = ExpectationTable::new(Quantity::Cost(m), cutoff, EvalMode::Recurrence).tabulate::<f64>(2000).unwrap();
            let first = v.windows(2).enumerate().skip(cutoff).find(|(_, w)| w[1] <= w[0]);
            assert!(first.is_none(), "{m}, M = {cutoff}: {first:?}");
        }
    }
}
