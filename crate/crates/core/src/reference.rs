//! Independent reference solvers and the exhaustive differential harness.
//!
//! Nothing here reuses the iteration in [`crate::solver`]. The brute-force
//! sweeps work on raw integers and the Stern–Brocot search only leans on the
//! rational type itself.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::solver::{solve_proper, OpenInterval};

/// Sweeps `q = 1, 2, ..., cap` and returns the first `p/q` inside the
/// interval.
///
/// For a given `q` only `p = floor(low * q) + 1` needs testing: it is the
/// smallest numerator with `p/q > low`, and any larger one is further from
/// `low` and closer to (or past) `high`.
pub fn oracle_min_denominator(interval: &OpenInterval, cap: u64) -> Result<Rational> {
    let (a, b) = (interval.low().numer(), interval.low().denom());
    let (c, d) = (interval.high().numer(), interval.high().denom());
    for q in 1..=cap {
        let q = BigInt::from(q);
        let p: BigInt = (a * &q).div_floor(b) + 1;
        if &p * d < c * &q {
            debug_assert!(p.gcd(&q).is_one());
            return Rational::new(p, q);
        }
    }
    Err(Error::SearchCap { cap })
}

/// Sweeps `p = 1, 2, ..., cap` and returns the first numerator for which some
/// `q` puts `p/q` inside the interval, paired with the smallest such `q`.
pub fn oracle_min_numerator(interval: &OpenInterval, cap: u64) -> Result<Rational> {
    let (a, b) = (interval.low().numer(), interval.low().denom());
    let (c, d) = (interval.high().numer(), interval.high().denom());
    for p in 1..=cap {
        let p = BigInt::from(p);
        // Smallest q with p/q < high, i.e. q > p*d/c.
        let q: BigInt = (&p * d).div_floor(c) + 1;
        // p/q > low  <=>  p*b > a*q
        if &p * b > a * &q {
            return Rational::new(p, q);
        }
    }
    Err(Error::SearchCap { cap })
}

/// The simplest fraction inside the interval by recursive descent: take the
/// smallest integer inside if there is one, otherwise strip the common
/// integer part, invert (swapping endpoints), and recurse.
pub fn stern_brocot_simplest(interval: &OpenInterval) -> Rational {
    simplest_between(interval.low(), Some(interval.high()))
}

/// `high = None` stands for an unbounded interval.
fn simplest_between(low: &Rational, high: Option<&Rational>) -> Rational {
    let m = low.floor();
    let above = Rational::from_integer(&m + 1);
    if high.is_none_or(|h| above < *h) {
        return above;
    }
    let high = high.expect("bounded here");
    let whole = Rational::from_integer(m);
    let next_low = (high - &whole).recip().expect("high > low >= m");
    let low_frac = low - &whole;
    let next_high = (!low_frac.is_zero()).then(|| low_frac.recip().expect("nonzero"));
    let inner = simplest_between(&next_low, next_high.as_ref());
    &whole + &inner.recip().expect("inner > 0")
}

/// Interior of the Farey sequence of order `n`, ordered by denominator and
/// then numerator.
pub fn farey_interior(n: u64) -> Vec<Rational> {
    (2..=n)
        .flat_map(|q| {
            (1..q)
                .filter(move |p| p.gcd(&q) == 1)
                .map(move |p| Rational::from_reduced(p.into(), q.into()))
        })
        .collect()
}

/// All intervals `(x, y)` with `x < y` drawn from the Farey interior of order
/// `n`, in enumeration order.
pub fn farey_pairs(n: u64) -> Vec<OpenInterval> {
    let fractions = farey_interior(n);
    let mut pairs = Vec::with_capacity(fractions.len() * fractions.len().saturating_sub(1) / 2);
    for (i, x) in fractions.iter().enumerate() {
        for y in &fractions[i + 1..] {
            let (low, high) = if x < y { (x, y) } else { (y, x) };
            pairs.push(OpenInterval::new_unchecked(low.clone(), high.clone()));
        }
    }
    pairs
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub interval: OpenInterval,
    pub paper: Result<Rational>,
    pub oracle: Result<Rational>,
    pub stern_brocot: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialReport {
    pub max_denominator: u64,
    pub pairs_checked: u64,
    /// Sorted by interval.
    pub mismatches: Vec<Mismatch>,
}

impl DifferentialReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "max_denominator={} pairs_checked={} mismatches={} status={}",
            self.max_denominator,
            self.pairs_checked,
            self.mismatches.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    /// One tab-separated line per mismatch:
    /// `mismatch <low> <high> paper=<x> oracle=<y> stern_brocot=<z>`.
    pub fn mismatch_lines(&self) -> Vec<String> {
        self.mismatches.iter().map(Mismatch::to_string).collect()
    }
}

fn outcome(result: &Result<Rational>) -> String {
    match result {
        Ok(x) => x.to_string(),
        Err(e) => format!("error({e})"),
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mismatch\t{}\t{}\tpaper={}\toracle={}\tstern_brocot={}",
            self.interval.low(),
            self.interval.high(),
            outcome(&self.paper),
            outcome(&self.oracle),
            self.stern_brocot
        )
    }
}

/// Checks the iterative solver against the denominator sweep and the
/// Stern–Brocot search on every Farey pair of order `max_denominator`.
pub fn differential_check(max_denominator: u64) -> Result<DifferentialReport> {
    if max_denominator < 2 {
        return Err(Error::MaxDenominator(max_denominator));
    }
    let pairs = farey_pairs(max_denominator);
    // The mediant of two endpoints with denominators <= n lies inside and has
    // denominator <= 2n.
    let cap = 2 * max_denominator;

    let mut mismatches: Vec<Mismatch> = pairs
        .par_iter()
        .filter_map(|interval| {
            let paper = solve_proper(interval).map(|s| s.answer);
            let oracle = oracle_min_denominator(interval, cap);
            let stern_brocot = stern_brocot_simplest(interval);
            let agree = matches!((&paper, &oracle), (Ok(p), Ok(o)) if p == o && *o == stern_brocot);
            (!agree).then(|| Mismatch {
                interval: interval.clone(),
                paper,
                oracle,
                stern_brocot,
            })
        })
        .collect();
    mismatches.sort_by(|x, y| x.interval.cmp(&y.interval));

    Ok(DifferentialReport {
        max_denominator,
        pairs_checked: pairs.len() as u64,
        mismatches,
    })
}
