//! Certified sign and decimal output for [`AlgNum`] via rational interval enclosures.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::Pow;

use super::{AlgNum, ExactError, Radicand, Rational};

const START_BITS: u64 = 64;

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    fn point(q: Rational) -> Self {
        Enclosure { lo: q.clone(), hi: q }
    }

    fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    fn scale(&self, q: &Rational) -> Enclosure {
        if q.signum() >= 0 {
            Enclosure { lo: q * &self.lo, hi: q * &self.hi }
        } else {
            Enclosure { lo: q * &self.hi, hi: q * &self.lo }
        }
    }

    /// `Some(sign)` once the interval no longer straddles or touches zero.
    fn strict_sign(&self) -> Option<i8> {
        if self.lo.signum() > 0 {
            Some(1)
        } else if self.hi.signum() < 0 {
            Some(-1)
        } else {
            None
        }
    }
}

/// `[floor(sqrt(n) 2^bits), floor(sqrt(n) 2^bits) + 1] / 2^bits`.
fn sqrt_enclosure(n: &BigUint, bits: u64) -> Enclosure {
    let scaled: BigUint = n << (2 * bits as usize);
    let root = BigInt::from(scaled.sqrt());
    let lo = Rational::from_integer(root.clone()).mul_pow2(-(bits as i64));
    let hi = Rational::from_integer(root + 1).mul_pow2(-(bits as i64));
    Enclosure { lo, hi }
}

impl AlgNum {
    /// Rational interval containing the value; the radicals are known to `bits` bits.
    pub fn enclosure(&self, bits: u64) -> Enclosure {
        let [a, b, c, d] = self.coefficients();
        let mut acc = Enclosure::point(a.clone());
        let m = self.m();
        let terms: [(&Rational, Option<&Radicand>); 3] =
            [(b, self.k1()), (c, self.k2()), (d, m.as_ref())];
        for (coeff, radicand) in terms {
            if let (false, Some(k)) = (coeff.is_zero(), radicand) {
                acc = acc.add(&sqrt_enclosure(k.value(), bits).scale(coeff));
            }
        }
        acc
    }

    /// Exact sign. Zero is decided structurally first, so the refinement loop always ends.
    pub fn sign(&self) -> i8 {
        if let Some(q) = self.as_rational() {
            return q.signum();
        }
        let mut bits = START_BITS;
        loop {
            if let Some(s) = self.enclosure(bits).strict_sign() {
                return s;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> AlgNum {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact comparison; fails only if the difference needs a third radicand.
    pub fn cmp_exact(&self, other: &AlgNum) -> Result<Ordering, ExactError> {
        Ok(self.checked_sub(other)?.sign().cmp(&0))
    }

    /// Decimal text with `digits` significant digits, rounded half away from zero.
    ///
    /// Irrational values never sit exactly on a rounding boundary, so refining the
    /// enclosure until both ends round the same way terminates.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return if digits == 1 { "0".to_string() } else { format!("0.{}", "0".repeat(digits - 1)) };
        }
        let negative = self.sign() < 0;
        let magnitude = self.abs();
        let mut bits = START_BITS;
        let (mantissa, exponent) = loop {
            let Enclosure { lo, hi } = magnitude.enclosure(bits);
            bits *= 2;
            if lo.signum() <= 0 {
                continue;
            }
            let e = floor_log10(&lo);
            if floor_log10(&hi) != e {
                continue;
            }
            let shift = digits as i64 - 1 - e;
            let (n_lo, n_hi) = (scale10(&lo, shift).round_half_away(), scale10(&hi, shift).round_half_away());
            if n_lo != n_hi {
                continue;
            }
            let limit = BigInt::from(10u8).pow(digits as u32);
            if n_lo == limit {
                break (BigInt::from(10u8).pow(digits as u32 - 1), e + 1);
            }
            break (n_lo, e);
        };
        let text = mantissa.to_string();
        let body = if exponent < 0 {
            format!("0.{}{}", "0".repeat((-exponent - 1) as usize), text)
        } else {
            let int_len = exponent as usize + 1;
            if int_len >= text.len() {
                format!("{text}{}", "0".repeat(int_len - text.len()))
            } else {
                format!("{}.{}", &text[..int_len], &text[int_len..])
            }
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Nearest `f64`, for layout only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(17).parse().expect("decimal text parses as f64")
    }
}

fn pow10(e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::from(10u8).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip().expect("nonzero")
    }
}

fn scale10(q: &Rational, e: i64) -> Rational {
    q * pow10(e)
}

/// `floor(log10(q))` for `q > 0`.
fn floor_log10(q: &Rational) -> i64 {
    let digits = |n: &BigInt| n.magnitude().to_string().len() as i64;
    let mut e = digits(q.numer()) - digits(q.denom());
    while q < &pow10(e) {
        e -= 1;
    }
    while q >= &pow10(e + 1) {
        e += 1;
    }
    e
}

/// Exact `sign(a + b*sqrt(k))` without intervals; used to cross-check in tests.
#[cfg(test)]
pub(crate) fn sign_single_radical(a: &Rational, b: &Rational, k: &BigUint) -> i8 {
    let sa = a.signum();
    let sb = b.signum();
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return if sa == 0 { sb } else { sa };
    }
    // opposite signs: compare a^2 with b^2 k
    let a2 = a.square();
    let b2k = b.square() * Rational::from_integer(BigInt::from(k.clone()));
    match a2.cmp(&b2k) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}
