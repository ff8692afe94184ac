//! Arbitrary nonnegative intervals, reduced to the `[0, 1]` case by an
//! integer shift.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::rational::Rational;
use crate::solver::{solve_shifted, OpenInterval, Solution};

/// Smallest integer strictly inside `interval`, if any.
pub fn smallest_integer_in(interval: &OpenInterval) -> Option<BigInt> {
    let candidate: BigInt = interval.low().floor() + 1;
    (Rational::from_integer(candidate.clone()) < *interval.high()).then_some(candidate)
}

/// Minimal-denominator fraction inside any nonnegative open interval.
///
/// If integers lie inside, the smallest one wins. Otherwise both endpoints
/// share the integer part `m`, and the answer is `m` plus the answer for the
/// interval shifted down by `m`. Either way the trace records the shift in
/// [`Trace::offset`](crate::Trace::offset).
pub fn solve_general(interval: &OpenInterval) -> Result<Solution> {
    let offset = match smallest_integer_in(interval) {
        // Shifting by n - 1 leaves (low', high') with low' < 1 < high', which
        // is terminal with answer 1.
        Some(n) => n - BigInt::one(),
        None => interval.low().floor(),
    };
    solve_shifted(interval.clone(), offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_proper;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn iv(a: i64, b: i64, c: i64, d: i64) -> OpenInterval {
        OpenInterval::new(r(a, b), r(c, d)).unwrap()
    }

    #[test]
    fn smallest_integer_examples() {
        assert_eq!(smallest_integer_in(&iv(5, 2, 7, 2)), Some(BigInt::from(3)));
        assert_eq!(smallest_integer_in(&iv(1, 3, 2, 3)), None);
        assert_eq!(smallest_integer_in(&iv(3, 2, 4, 1)), Some(BigInt::from(2)));
        assert_eq!(smallest_integer_in(&iv(2, 1, 3, 1)), None);
        assert_eq!(smallest_integer_in(&iv(0, 1, 3, 2)), Some(BigInt::from(1)));
    }

    #[test]
    fn general_examples() {
        assert_eq!(solve_general(&iv(19, 94, 17, 76)).unwrap().answer, r(2, 9));
        assert_eq!(solve_general(&iv(7, 4, 39, 22)).unwrap().answer, r(23, 13));

        let sol = solve_general(&iv(5, 2, 7, 2)).unwrap();
        assert_eq!(sol.answer, r(3, 1));
        assert!(sol.trace.steps.is_empty());
        assert_eq!(sol.trace.offset, BigInt::from(2));
        assert_eq!(sol.trace.terminal, iv(1, 2, 3, 2));
        assert_eq!(sol.intermediates, vec![r(1, 1), r(3, 1)]);
    }

    #[test]
    fn integer_endpoints() {
        // (2, 3) holds no integer; the left endpoint shifts to zero.
        assert_eq!(solve_general(&iv(2, 1, 3, 1)).unwrap().answer, r(5, 2));
        assert_eq!(solve_general(&iv(0, 1, 3, 2)).unwrap().answer, r(1, 1));
    }

    #[test]
    fn agrees_with_proper_solver_on_unit_intervals() {
        for i in [
            iv(19, 94, 17, 76),
            iv(3, 4, 17, 22),
            iv(0, 1, 2, 5),
            iv(1, 2, 1, 1),
        ] {
            assert_eq!(solve_general(&i).unwrap(), solve_proper(&i).unwrap());
        }
    }
}
