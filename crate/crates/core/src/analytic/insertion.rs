use super::{rational, Frequency, Scalar};

/// Expected count of an Insertionsort frequency for one call on a random
/// segment of length `n`. Zero for the Quicksort frequencies.
pub fn per_call_insertion<T: Scalar>(which: Frequency, n: usize) -> T {
    let n_int = n as i128;
    match which {
        Frequency::InsertionCalls => T::from_int(1),
        Frequency::InsertionOuter => T::from_int(n_int + i128::from(n == 0)),
        // Keys that stop on a smaller neighbour: all but the left-to-right minima.
        Frequency::InsertionStops => T::from_int(n_int) - T::harmonic(n),
        // Expected inversions.
        Frequency::InsertionShifts => T::from_rational(&rational((n_int * (n_int - 1).max(0)) as i64, 4)),
        _ => T::zero(),
    }
}

/// Expected Insertionsort frequencies accumulated over a whole sort.
#[derive(Clone, Debug, PartialEq)]
pub struct InsertionFrequencies<T> {
    pub calls: T,
    pub outer: T,
    pub stops: T,
    pub shifts: T,
}

/// Leading `(n+1)`-linear forms of the Insertionsort frequencies under
/// cutoff `M`. With `M = 1` Insertionsort never runs and all four are 0.
///
/// These omit the `O(n^-4)` remainder; exact values come from the recurrence.
pub fn insertionsort_frequencies<T: Scalar>(cutoff: usize, n: usize) -> InsertionFrequencies<T> {
    if cutoff < 2 {
        return InsertionFrequencies { calls: T::zero(), outer: T::zero(), stops: T::zero(), shifts: T::zero() };
    }
    let m = cutoff as i64;
    let r = |a, b| T::from_rational(&rational(a, b));
    let scale = T::from_int(n as i128 + 1);
    let calls = r(12, 5 * (m + 2));
    let outer = r(1, 1) + r(18, 5 * (m + 1)) - r(6, m + 2);
    let stops = r(1, 1) + r(3, 5 * (m + 2)) - r(12, 5 * (m + 2)) * T::harmonic(cutoff + 1);
    let shifts = r(3 * m, 20) + r(6, 5 * (m + 2)) - r(11, 20);
    InsertionFrequencies {
        calls: calls * scale.clone(),
        outer: outer * scale.clone(),
        stops: stops * scale.clone(),
        shifts: shifts * scale,
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    #[test]
    fn per_call_small_values() {
        let q = |f, n| per_call_insertion::<BigRational>(f, n);
        assert_eq!(q(Frequency::InsertionCalls, 5), rational(1, 1));
        assert_eq!(q(Frequency::InsertionOuter, 0), rational(1, 1));
        assert_eq!(q(Frequency::InsertionOuter, 3), rational(3, 1));
        assert_eq!(q(Frequency::InsertionStops, 2), rational(1, 2));
        assert_eq!(q(Frequency::InsertionShifts, 2), rational(1, 2));
        assert_eq!(q(Frequency::InsertionShifts, 0), rational(0, 1));
    }

    #[test]
    fn call_count_for_cutoff_three() {
        let f = insertionsort_frequencies::<BigRational>(3, 9);
        assert_eq!(f.calls, rational(12, 25) * rational(10, 1));
    }

    #[test]
    fn shift_coefficient_for_cutoff_two() {
        let f = insertionsort_frequencies::<BigRational>(2, 0);
        assert_eq!(f.shifts, rational(1, 20));
    }

    #[test]
    fn cutoff_one_has_no_insertion_work() {
        let f = insertionsort_frequencies::<BigRational>(1, 100);
        assert_eq!(f.calls, rational(0, 1));
        assert_eq!(f.shifts, rational(0, 1));
    }
}
