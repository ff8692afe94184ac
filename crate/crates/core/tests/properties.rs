use minfrac::reference::{
    differential_check, farey_pairs, oracle_min_denominator, oracle_min_numerator,
    stern_brocot_simplest,
};
use minfrac::{
    apply_modification, classify, decompose_step, smallest_integer_in, solve_general, solve_proper,
    BigInt, Classification, OpenInterval, Rational,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while b != BigInt::from(0) {
        let t = &a % &b;
        a = std::mem::replace(&mut b, t);
    }
    a
}

/// Reduced, ordered and inside [0, 1] on entry means every step must keep the
/// raw quotients coprime and the endpoints ordered.
fn check_every_step(interval: &OpenInterval) {
    let mut current = interval.clone();
    loop {
        match classify(&current) {
            Classification::Terminal => break,
            Classification::ZeroLeft => {
                let modified = apply_modification(&current).unwrap();
                let (_, next) = decompose_step(&modified).unwrap();
                assert_eq!(classify(&next), Classification::Terminal, "{current}");
                break;
            }
            Classification::Reducible => {
                let (w, next) = decompose_step(&current).unwrap();
                assert!(w >= BigInt::from(1));
                let (a, b) = (current.low().numer(), current.low().denom());
                let (c, d) = (current.high().numer(), current.high().denom());
                let low_num = d - &w * c;
                let high_num = b - &w * a;
                if low_num != BigInt::from(0) {
                    assert_eq!(gcd(low_num.clone(), c.clone()), BigInt::from(1));
                    assert_eq!(next.low().denom(), c, "left endpoint was reduced further");
                }
                assert_eq!(gcd(high_num.clone(), a.clone()), BigInt::from(1));
                assert_eq!(next.high().denom(), a, "right endpoint was reduced further");
                assert!(next.low() < next.high());
                assert!(*next.low() < Rational::one());
                current = next;
            }
        }
    }
}

#[test]
fn farey_corpus_step_invariants() {
    for interval in farey_pairs(30) {
        check_every_step(&interval);

        let sol = solve_proper(&interval).unwrap();
        assert!(interval.contains(&sol.answer));
        assert_eq!(sol.intermediates.first(), Some(&Rational::one()));
        assert_eq!(sol.intermediates.last(), Some(&sol.answer));

        let bits = interval.low().denom().max(interval.high().denom()).bits() as usize;
        assert!(
            sol.trace.steps.len() <= 2 * bits + 4,
            "{interval}: {} steps",
            sol.trace.steps.len()
        );

        let fired: Vec<usize> = sol
            .trace
            .steps
            .iter()
            .filter(|s| s.modification_applied())
            .map(|s| s.index)
            .collect();
        assert!(
            fired.is_empty() || fired == [sol.trace.steps.len()],
            "{interval}"
        );
        if let Some(last) = sol.trace.steps.last().filter(|s| s.modification_applied()) {
            assert!(*last.interval_after.high() > Rational::one());
        }
        assert!(*sol.trace.terminal.high() > Rational::one());
        assert!(*sol.trace.terminal.low() < Rational::one());
    }
}

#[test]
fn optimality_against_oracles_up_to_60() {
    let report = differential_check(60).unwrap();
    assert!(report.passed(), "{}", report.mismatch_lines().join("\n"));
    assert_eq!(report.pairs_checked, farey_pairs(60).len() as u64);
}

#[test]
fn numerator_oracle_coincides_on_farey_25() {
    for interval in farey_pairs(25) {
        let by_den = oracle_min_denominator(&interval, 50).unwrap();
        let by_num = oracle_min_numerator(&interval, 50).unwrap();
        assert_eq!(by_den, by_num, "{interval}");

        // No smaller denominator fits, re-swept independently.
        let q0 = by_den.denom().clone();
        let mut q = BigInt::from(1);
        while q < q0 {
            let mut p = BigInt::from(0);
            while Rational::new(p.clone(), q.clone()).unwrap() < *interval.high() {
                assert!(!interval.contains(&Rational::new(p.clone(), q.clone()).unwrap()));
                p += 1;
            }
            q += 1;
        }
    }
}

#[test]
fn modification_soundness_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let d: i64 = rng.random_range(1..=100_000);
        let c: i64 = rng.random_range(1..=d);
        let high = r(c, d);
        let d = high.denom().clone();
        let zero_left = OpenInterval::new(Rational::zero(), high.clone()).unwrap();
        let replaced = OpenInterval::new(Rational::new(1, d + 2).unwrap(), high).unwrap();
        assert_eq!(apply_modification(&zero_left).unwrap(), replaced);
        assert_eq!(
            solve_proper(&zero_left).unwrap().answer,
            solve_proper(&replaced).unwrap().answer
        );
    }
}

#[test]
fn general_solver_on_shifted_farey_corpus() {
    for interval in farey_pairs(12) {
        let base = solve_general(&interval).unwrap();
        assert_eq!(base, solve_proper(&interval).unwrap());
        for n in 1..=5 {
            let moved = interval.shifted(&BigInt::from(n)).unwrap();
            let sol = solve_general(&moved).unwrap();
            assert_eq!(sol.answer, &base.answer + &Rational::from(n));
            assert_eq!(sol.answer.denom(), base.answer.denom());
            assert_eq!(sol.trace.w_list(), base.trace.w_list());
            assert_eq!(sol.answer, stern_brocot_simplest(&moved));
        }
    }
}

fn small_interval() -> impl Strategy<Value = OpenInterval> {
    (0i64..400, 1i64..60, 0i64..400, 1i64..60).prop_filter_map("empty", |(a, b, c, d)| {
        let (x, y) = (r(a, b), r(c, d));
        let (low, high) = if x < y { (x, y) } else { (y, x) };
        OpenInterval::new(low, high).ok()
    })
}

proptest! {
    #[test]
    fn general_matches_oracles(interval in small_interval()) {
        let sol = solve_general(&interval).unwrap();
        let cap = (interval.low().denom() + interval.high().denom()).try_into().unwrap();
        prop_assert!(interval.contains(&sol.answer));
        prop_assert_eq!(&sol.answer, &oracle_min_denominator(&interval, cap).unwrap());
        prop_assert_eq!(&sol.answer, &stern_brocot_simplest(&interval));
        prop_assert_eq!(&sol.answer, &oracle_min_numerator(&interval, 100_000).unwrap());
    }

    #[test]
    fn integer_inside_wins(interval in small_interval()) {
        let sol = solve_general(&interval).unwrap();
        match smallest_integer_in(&interval) {
            Some(n) => {
                prop_assert!(sol.answer.is_integer());
                prop_assert_eq!(sol.answer.numer(), &n);
                prop_assert!(sol.trace.steps.is_empty());
                // No smaller integer fits.
                let below = Rational::from_integer(n - 1);
                prop_assert!(!interval.contains(&below));
            }
            None => prop_assert!(!sol.answer.is_integer()),
        }
    }

    #[test]
    fn shift_invariance(interval in small_interval(), n in 1i64..=5) {
        let base = solve_general(&interval).unwrap().answer;
        let moved = solve_general(&interval.shifted(&BigInt::from(n)).unwrap()).unwrap().answer;
        prop_assert_eq!(moved, &base + &Rational::from(n));
    }
}
