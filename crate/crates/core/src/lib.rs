//! Finds the fraction with the smallest denominator strictly inside an open
//! interval with rational endpoints.
//!
//! ```
//! use minfrac::{solve_proper, OpenInterval, Rational};
//!
//! let interval = OpenInterval::new("19/94".parse()?, "17/76".parse()?)?;
//! let solution = solve_proper(&interval)?;
//! assert_eq!(solution.answer, Rational::new(2, 9)?);
//! # Ok::<(), minfrac::Error>(())
//! ```

mod error;
mod general;
mod rational;
pub mod reference;
mod solver;

pub use error::{Error, Result};
pub use general::{smallest_integer_in, solve_general};
pub use rational::Rational;
pub use solver::{
    apply_modification, back_substitute, classify, decompose_step, iteration_cap, solve_proper,
    Classification, IterationStep, Modification, OpenInterval, Solution, Trace,
};

pub use num_bigint::BigInt;
