//! Exact rational numbers over arbitrary-precision integers.
//!
//! A [`Rational`] is always kept in canonical form: the denominator is
//! positive, numerator and denominator are coprime, and zero is `0/1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds the canonical reduced form of `numerator / denominator`.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator.into(), denominator)))
    }

    /// Wraps a pair already known to be coprime with a positive denominator.
    pub(crate) fn from_reduced(numerator: BigInt, denominator: BigInt) -> Self {
        debug_assert!(denominator.is_positive());
        debug_assert!(numerator.gcd(&denominator).is_one());
        Rational(BigRational::new_raw(numerator, denominator))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Largest integer not above `self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Splits a nonnegative value into its integer part and the remaining
    /// fraction in `[0, 1)`.
    pub fn split_integer(&self) -> Result<(BigInt, Rational)> {
        if self.is_negative() {
            return Err(Error::Negative(self.to_string()));
        }
        let (whole, rem) = self.numer().div_rem(self.denom());
        // gcd(n - wd, d) = gcd(n, d) = 1, so the remainder is already reduced.
        let frac = if rem.is_zero() {
            Rational::zero()
        } else {
            Rational::from_reduced(rem, self.denom().clone())
        };
        Ok((whole, frac))
    }

    pub fn recip(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::ZeroReciprocal);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Rendering used in summaries: integers print without the `/1`.
    pub fn to_summary_string(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            self.to_string()
        }
    }

    /// Decimal expansion truncated to `significant` significant digits.
    ///
    /// Returns the digits and whether the expansion is exact. The integer part
    /// is always printed in full.
    pub fn to_decimal(&self, significant: usize) -> (String, bool) {
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        let numer = self.numer().abs();
        let denom = self.denom();
        let (whole, mut rem) = numer.div_rem(denom);
        let whole_digits = whole.to_string();
        out.push_str(&whole_digits);

        let mut produced = if whole.is_zero() {
            0
        } else {
            whole_digits.len()
        };
        if rem.is_zero() || produced >= significant {
            return (out, rem.is_zero());
        }

        out.push('.');
        let ten = BigInt::from(10);
        while !rem.is_zero() && produced < significant {
            let (digit, next) = (&rem * &ten).div_rem(denom);
            out.push_str(&digit.to_string());
            if produced > 0 || !digit.is_zero() {
                produced += 1;
            }
            rem = next;
        }
        (out, rem.is_zero())
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication keeps the order.
        (self.numer() * other.denom()).cmp(&(other.numer() * self.denom()))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn add(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn sub(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;

    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

/// Accepts `p/q`, decimals such as `0.2021` or `.75`, and bare integers.
/// Surrounding whitespace is ignored. Scientific notation is rejected.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let malformed = || Error::Malformed(text.to_string());
        let trimmed = text.trim();

        if let Some((num, den)) = trimmed.split_once('/') {
            let num = parse_integer(num.trim()).ok_or_else(malformed)?;
            let den = parse_integer(den.trim()).ok_or_else(malformed)?;
            return Rational::new(num, den);
        }

        let (negative, body) = match trimmed.as_bytes().first() {
            Some(b'-') => (true, &trimmed[1..]),
            Some(b'+') => (false, &trimmed[1..]),
            _ => (false, trimmed),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if int_part.len() + frac_part.len() == 0 || !all_digits(int_part) || !all_digits(frac_part)
        {
            return Err(malformed());
        }

        let digits = format!("{int_part}{frac_part}");
        let mut numer: BigInt = digits.parse().map_err(|_| malformed())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        Rational::new(numer, denom)
    }
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}
