//! Iterative interval reduction for intervals inside `[0, 1]`.
//!
//! An interval `(A/B, C/D)` is rewritten as `(1/(W + C'/D'), 1/(W + A'/B'))`
//! where `W = floor(D/C)`. The reduced interval `(A'/B', C'/D')` is processed
//! the same way until its right endpoint exceeds 1, at which point `1/1` is the
//! simplest fraction inside. The collected `W` values are then unwound from
//! `1/1` back to the answer for the original interval.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A nonempty open interval `(low, high)` with `0 <= low < high`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpenInterval {
    low: Rational,
    high: Rational,
}

impl OpenInterval {
    pub fn new(low: Rational, high: Rational) -> Result<Self> {
        if low >= high {
            return Err(Error::EmptyInterval {
                low: low.to_string(),
                high: high.to_string(),
            });
        }
        if low.is_negative() {
            return Err(Error::Negative(low.to_string()));
        }
        Ok(OpenInterval { low, high })
    }

    pub(crate) fn new_unchecked(low: Rational, high: Rational) -> Self {
        debug_assert!(low < high && !low.is_negative());
        OpenInterval { low, high }
    }

    pub fn low(&self) -> &Rational {
        &self.low
    }

    pub fn high(&self) -> &Rational {
        &self.high
    }

    /// Strict membership.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.low < x && x < &self.high
    }

    /// The interval translated by `offset`. Fails if the low end would become
    /// negative.
    pub fn shifted(&self, offset: &BigInt) -> Result<Self> {
        let offset = Rational::from_integer(offset.clone());
        OpenInterval::new(&self.low + &offset, &self.high + &offset)
    }

    fn precondition(&self, reason: &'static str) -> Error {
        Error::Precondition {
            low: self.low.to_string(),
            high: self.high.to_string(),
            reason,
        }
    }
}

impl fmt::Display for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.low, self.high)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Right endpoint above 1: `1/1` lies inside.
    Terminal,
    /// Left endpoint is 0 and the right endpoint is at most 1; decomposing
    /// would divide by zero.
    ZeroLeft,
    /// `0 < low < high <= 1`.
    Reducible,
}

/// The zero left endpoint replaced by `1/(D + 2)` before a step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modification {
    pub before: OpenInterval,
    pub after: OpenInterval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationStep {
    /// 1-based position of this step.
    pub index: usize,
    pub w: BigInt,
    pub interval_after: OpenInterval,
    /// Set when the zero-endpoint substitution fired just before this step.
    pub modification: Option<Modification>,
}

impl IterationStep {
    pub fn modification_applied(&self) -> bool {
        self.modification.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    /// The interval the caller asked about.
    pub initial: OpenInterval,
    /// Integer subtracted from `initial` before iterating; 0 for intervals
    /// already inside `[0, 1]`.
    pub offset: BigInt,
    pub steps: Vec<IterationStep>,
    pub terminal: OpenInterval,
}

impl Trace {
    pub fn w_list(&self) -> Vec<BigInt> {
        self.steps.iter().map(|s| s.w.clone()).collect()
    }

    pub fn is_shifted(&self) -> bool {
        !self.offset.is_zero()
    }

    pub fn modification(&self) -> Option<&Modification> {
        self.steps.iter().find_map(|s| s.modification.as_ref())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub answer: Rational,
    pub trace: Trace,
    /// Back-substitution chain from `1/1` to the answer.
    pub intermediates: Vec<Rational>,
}

/// Decides what the iteration does next with `interval`.
///
/// Terminal is tested first, so `(0, high)` with `high > 1` is terminal.
pub fn classify(interval: &OpenInterval) -> Classification {
    if interval.high > Rational::one() {
        Classification::Terminal
    } else if interval.low.is_zero() {
        Classification::ZeroLeft
    } else {
        Classification::Reducible
    }
}

/// One reduction step: returns `W = floor(D/C)` and the interval
/// `(D/C - W, B/A - W)` for input `(A/B, C/D)`.
pub fn decompose_step(interval: &OpenInterval) -> Result<(BigInt, OpenInterval)> {
    if classify(interval) != Classification::Reducible {
        return Err(interval.precondition("decomposition needs 0 < low < high <= 1"));
    }
    let (a, b) = (interval.low.numer(), interval.low.denom());
    let (c, d) = (interval.high.numer(), interval.high.denom());

    let w = d / c;
    let low_num = d - &w * c;
    let high_num = b - &w * a;
    // gcd(D - WC, C) = gcd(D, C) = 1 and gcd(B - WA, A) = gcd(B, A) = 1.
    let low = if low_num.is_zero() {
        Rational::zero()
    } else {
        Rational::from_reduced(low_num, c.clone())
    };
    let high = Rational::from_reduced(high_num, a.clone());
    Ok((w, OpenInterval::new_unchecked(low, high)))
}

/// Replaces the zero left endpoint of `(0, C/D)` by `1/(D + 2)`.
pub fn apply_modification(interval: &OpenInterval) -> Result<OpenInterval> {
    if classify(interval) != Classification::ZeroLeft {
        return Err(interval.precondition("modification needs low = 0 and high <= 1"));
    }
    let low = Rational::from_reduced(BigInt::one(), interval.high.denom() + 2u32);
    Ok(OpenInterval::new_unchecked(low, interval.high.clone()))
}

/// Unwinds `W` values from `1/1` via `(P, Q) <- (Q, W*Q + P)`, last `W` first.
///
/// Returns the final fraction and the chain of intermediates starting at 1/1.
pub fn back_substitute(ws: &[BigInt]) -> (Rational, Vec<Rational>) {
    let mut p = BigInt::one();
    let mut q = BigInt::one();
    let mut chain = Vec::with_capacity(ws.len() + 1);
    chain.push(Rational::one());
    for w in ws.iter().rev() {
        let next_q = w * &q + &p;
        p = std::mem::replace(&mut q, next_q);
        chain.push(Rational::from_reduced(p.clone(), q.clone()));
    }
    (chain.last().cloned().unwrap_or_else(Rational::one), chain)
}

/// Upper bound on the number of iterations for an interval with the given
/// endpoint denominators.
pub fn iteration_cap(interval: &OpenInterval) -> usize {
    let bits = interval.low.denom().max(interval.high.denom()).bits() as usize;
    4 * bits + 16
}

/// Solves an interval inside `[0, 1]`: `0 <= low < high <= 1`.
pub fn solve_proper(interval: &OpenInterval) -> Result<Solution> {
    if interval.high > Rational::one() {
        return Err(interval.precondition("expected high <= 1"));
    }
    solve_shifted(interval.clone(), BigInt::zero())
}

/// Runs the iteration on `initial - offset`, which must have `low < 1`, and
/// shifts the answer back by `offset`.
pub(crate) fn solve_shifted(initial: OpenInterval, offset: BigInt) -> Result<Solution> {
    let start = initial.shifted(&-offset.clone())?;
    debug_assert!(start.low < Rational::one());
    let cap = iteration_cap(&start);

    let mut steps: Vec<IterationStep> = Vec::new();
    let mut pending: Option<Modification> = None;
    let mut current = start;
    loop {
        match classify(&current) {
            Classification::Terminal => break,
            Classification::ZeroLeft => {
                if pending.is_some() || steps.iter().any(IterationStep::modification_applied) {
                    return Err(Error::Internal("zero left endpoint reached twice"));
                }
                let after = apply_modification(&current)?;
                pending = Some(Modification {
                    before: current,
                    after: after.clone(),
                });
                current = after;
            }
            Classification::Reducible => {
                if steps.len() >= cap {
                    return Err(Error::IterationCap { cap });
                }
                let (w, next) = decompose_step(&current)?;
                steps.push(IterationStep {
                    index: steps.len() + 1,
                    w,
                    interval_after: next.clone(),
                    modification: pending.take(),
                });
                current = next;
            }
        }
    }

    let ws: Vec<BigInt> = steps.iter().map(|s| s.w.clone()).collect();
    let (sub_answer, mut intermediates) = back_substitute(&ws);
    let answer = if offset.is_zero() {
        sub_answer
    } else {
        let shifted = &sub_answer + &Rational::from_integer(offset.clone());
        intermediates.push(shifted.clone());
        shifted
    };
    debug_assert!(initial.contains(&answer));

    Ok(Solution {
        answer,
        trace: Trace {
            initial,
            offset,
            steps,
            terminal: current,
        },
        intermediates,
    })
}
