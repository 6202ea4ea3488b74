use std::fmt;

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};

use super::ExactError;

/// A squarefree integer `>= 2`, the argument of a square root in an [`AlgNum`](super::AlgNum).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radicand(BigUint);

impl Radicand {
    /// Accepts `n` only if it is squarefree and at least 2.
    pub fn new(n: impl Into<BigUint>) -> Result<Self, ExactError> {
        let n = n.into();
        if n < BigUint::from(2u8) {
            return Err(ExactError::InvalidRadicand(n.to_string()));
        }
        let (root, rest) = square_decompose(&n);
        if !root.is_one() {
            return Err(ExactError::InvalidRadicand(rest.to_string()));
        }
        Ok(Radicand(n))
    }

    pub(crate) fn new_unchecked(n: BigUint) -> Self {
        debug_assert!(n >= BigUint::from(2u8));
        Radicand(n)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl fmt::Display for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Radicand({})", self.0)
    }
}

/// Product of two squarefree integers as `g^2 * m` with `m` squarefree.
///
/// For squarefree `p`, `q` the gcd `g` is exactly the square part, so no factoring happens.
pub(crate) fn squarefree_product(p: &BigUint, q: &BigUint) -> (BigUint, BigUint) {
    let g = p.gcd(q);
    let m = (p / &g) * (q / &g);
    (g, m)
}

/// Writes `n = root^2 * rest` with `rest` squarefree (`0 = 0^2 * 1`).
///
/// Trial division runs only up to the cube root of the shrinking cofactor. What remains then
/// has at most two prime factors, all larger than the last trial divisor, so it is either
/// a perfect square `p^2` or already squarefree.
pub fn square_decompose(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = n.to_u128() {
        let (root, rest) = square_decompose_u128(small);
        return (BigUint::from(root), BigUint::from(rest));
    }
    let mut rem = n.clone();
    let mut root = BigUint::one();
    let mut rest = BigUint::one();
    let mut p: u64 = 2;
    loop {
        let p_big = BigUint::from(p);
        if &p_big * &p_big * &p_big > rem {
            break;
        }
        let mut e = 0u32;
        while (&rem % p).is_zero() {
            rem /= p;
            e += 1;
        }
        root *= p_big.pow(e / 2);
        if e % 2 == 1 {
            rest *= p;
        }
        p = next_trial(p);
        if let Some(small) = rem.to_u128() {
            let (r, s) = finish_u128(small, p);
            return (root * r, rest * s);
        }
    }
    let s = rem.sqrt();
    if &s * &s == rem && !rem.is_one() {
        (root * s, rest)
    } else {
        (root, rest * rem)
    }
}

/// Trial divisors 2, 3, then numbers of the form `6k +- 1`.
fn next_trial(p: u64) -> u64 {
    match p {
        2 => 3,
        3 => 5,
        _ if p % 6 == 1 => p + 4,
        _ => p + 2,
    }
}

fn square_decompose_u128(n: u128) -> (u128, u128) {
    finish_u128(n, 2)
}

/// Continues trial division of `rem` from divisor `start` (which must be 2, 3, or `6k +- 1`
/// with every smaller prime already removed).
fn finish_u128(mut rem: u128, start: u64) -> (u128, u128) {
    let mut root: u128 = 1;
    let mut rest: u128 = 1;
    let mut p = start;
    while (p as u128).pow(3) <= rem {
        let d = p as u128;
        let mut e = 0u32;
        while rem.is_multiple_of(d) {
            rem /= d;
            e += 1;
        }
        root *= d.pow(e / 2);
        if e % 2 == 1 {
            rest *= d;
        }
        p = next_trial(p);
    }
    let s = rem.sqrt();
    if s * s == rem && rem != 1 {
        (root * s, rest)
    } else {
        (root, rest * rem)
    }
}
