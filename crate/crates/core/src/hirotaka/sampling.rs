//! Deterministic sample generators for sweeps and fixtures.
//!
//! The generator and the sampling recipes are part of the reproducibility contract:
//! the same seed yields the same samples on every platform.

use std::collections::HashSet;

use crate::exactnum::{ratio, Rational};

use super::reverse::criterion_check;

/// 64-bit linear congruential generator, `state <- state * A + C (mod 2^64)`, with
/// Knuth's MMIX constants. Outputs are the high 31 bits of the new state.
#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub const MULTIPLIER: u64 = 6_364_136_223_846_793_005;
    pub const INCREMENT: u64 = 1_442_695_040_888_963_407;

    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(Self::MULTIPLIER).wrapping_add(Self::INCREMENT);
        self.state
    }

    /// Uniform-ish integer in `1..=n` (`(state >> 33) mod n + 1`; bias is below 2^-20 for
    /// the bounds used here).
    pub fn between_one_and(&mut self, n: u64) -> u64 {
        assert!(n >= 1);
        (self.next_u64() >> 33) % n + 1
    }

    /// `p / q` with `p, q` drawn independently from `1..=bound`.
    pub fn positive_rational(&mut self, bound: u64) -> Rational {
        let p = self.between_one_and(bound) as i64;
        let q = self.between_one_and(bound) as i64;
        ratio(p, q)
    }
}

/// Numerator and denominator bound for forward samples.
pub const FORWARD_BOUND: u64 = 1000;
/// Numerator and denominator bound for the random scaling of criterion triples.
pub const SCALE_BOUND: u64 = 1000;
/// Number of recurrence solutions that criterion samples cycle through.
pub const PELL_BASES: usize = 4;
/// Numerator and denominator bound for general separate pairs.
pub const PAIR_BOUND: u64 = 60;

/// Forward radii `(r, r')`, never equal.
pub fn forward_sample(rng: &mut Lcg64) -> (Rational, Rational) {
    loop {
        let r = rng.positive_rational(FORWARD_BOUND);
        let r_prime = rng.positive_rational(FORWARD_BOUND);
        if r != r_prime {
            return (r, r_prime);
        }
    }
}

/// A pair radius/radius/distance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    pub r1: Rational,
    pub r2: Rational,
    pub d: Rational,
}

impl Triple {
    pub fn new(r1: Rational, r2: Rational, d: Rational) -> Self {
        Triple { r1, r2, d }
    }

    pub fn scaled(&self, s: &Rational) -> Triple {
        Triple { r1: &self.r1 * s, r2: &self.r2 * s, d: &self.d * s }
    }
}

/// Integer solutions `(1, r2, d)` of `d^2 = 2 (1 + r2^2)`: start at `(d, r2) = (10, 7)` and
/// step `(d, r2) -> (3d + 4 r2, 2d + 3 r2)`, which preserves `d^2 - 2 r2^2 = 2`.
pub fn pell_triples() -> impl Iterator<Item = Triple> {
    std::iter::successors(Some((10i64, 7i64)), |&(d, r2)| {
        let next = (3 * d + 4 * r2, 2 * d + 3 * r2);
        (next.0 < i64::MAX / 8).then_some(next)
    })
    .map(|(d, r2)| Triple::new(ratio(1, 1), ratio(r2, 1), ratio(d, 1)))
}

/// `n` distinct triples on `d^2 = 2 (r1^2 + r2^2)` with `d > r1 + r2`.
///
/// Sample `i` takes recurrence solution `i mod 4`, multiplies it by a random `p/q`
/// (`p, q` in `1..=1000`), and swaps the radii when `i` is odd.
pub fn criterion_solutions(seed: u64, n: usize) -> Vec<Triple> {
    let bases: Vec<Triple> = pell_triples().take(PELL_BASES).collect();
    let mut rng = Lcg64::new(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(n);
    let mut i = 0usize;
    while out.len() < n {
        let s = rng.positive_rational(SCALE_BOUND);
        let mut t = bases[i % PELL_BASES].scaled(&s);
        if i % 2 == 1 {
            std::mem::swap(&mut t.r1, &mut t.r2);
        }
        if seen.insert(t.clone()) {
            out.push(t);
        }
        i += 1;
    }
    out
}

/// Smallest step `d -> d + k/97` (`k = 1, 2, ...`) that leaves the criterion curve.
pub fn perturbed(t: &Triple) -> Triple {
    (1..)
        .map(|k| Triple::new(t.r1.clone(), t.r2.clone(), &t.d + ratio(k, 97)))
        .find(|c| !criterion_check(&c.r1, &c.r2, &c.d))
        .expect("an unbounded search always finds a point off a conic")
}

/// A separate pair: `r1, r2, gap` are `p/q` with `p, q` in `1..=60`, `d = r1 + r2 + gap`;
/// every fourth draw (by the generator) forces `r2 = r1`.
pub fn separate_pair_sample(rng: &mut Lcg64) -> Triple {
    let r1 = rng.positive_rational(PAIR_BOUND);
    let r2 = if rng.between_one_and(4) == 1 { r1.clone() } else { rng.positive_rational(PAIR_BOUND) };
    let gap = rng.positive_rational(PAIR_BOUND);
    let d = &r1 + &r2 + gap;
    Triple::new(r1, r2, d)
}
