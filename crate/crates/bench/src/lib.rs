//! Input generators shared by the benchmarks.

use minfrac::{BigInt, OpenInterval, Rational};
use rand::{Rng, RngCore};

/// A uniformly random integer with exactly `bits` bits.
pub fn random_bits(rng: &mut impl RngCore, bits: u32) -> BigInt {
    let mut x = BigInt::from(0);
    for _ in 0..bits.div_ceil(32) {
        x = (x << 32) + rng.next_u32();
    }
    let excess = bits.div_ceil(32) * 32 - bits;
    x >>= excess;
    x | (BigInt::from(1) << (bits - 1))
}

/// A random interval inside (0, 1) whose endpoint denominators have about
/// `bits` bits.
pub fn random_proper_interval(rng: &mut impl RngCore, bits: u32) -> OpenInterval {
    loop {
        let mut ends = [0, 1].map(|_| {
            let den = random_bits(rng, bits);
            let num_bits = rng.random_range(1..bits);
            let num = random_bits(rng, num_bits);
            Rational::new(num, den).expect("nonzero denominator")
        });
        ends.sort();
        let [low, high] = ends;
        if let Ok(interval) = OpenInterval::new(low, high) {
            return interval;
        }
    }
}
