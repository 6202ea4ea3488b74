use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
///
/// Zero is stored as `0/1`. Text form is `p/q`, or just `p` when `q = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ExactError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Multiplies by `2^exp` (negative `exp` divides).
    pub fn mul_pow2(&self, exp: i64) -> Self {
        let shift = exp.unsigned_abs() as usize;
        if exp >= 0 {
            Rational(BigRational::new(self.numer() << shift, self.denom().clone()))
        } else {
            Rational(BigRational::new(self.numer().clone(), self.denom() << shift))
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Nearest integer, ties away from zero.
    pub fn round_half_away(&self) -> BigInt {
        let twice: BigInt = self.numer().abs() * 2;
        let d: BigInt = self.denom() * 2;
        let mag = (twice + self.denom()).div_floor(&d);
        if self.signum() < 0 {
            -mag
        } else {
            mag
        }
    }

    /// Splits `|self|` into numerator and denominator as unsigned integers.
    pub(crate) fn abs_parts(&self) -> (BigUint, BigUint) {
        (
            self.numer().magnitude().clone(),
            self.denom().magnitude().clone(),
        )
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Grammar: optional `-`, decimal digits, optionally `/` and decimal digits.
impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || ExactError::InvalidLiteral(s.to_string());
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num_text, den_text) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(num_text) || !den_text.is_none_or(digits) {
            return Err(invalid());
        }
        let mut numer: BigInt = num_text.parse().map_err(|_| invalid())?;
        if negative {
            numer = -numer;
        }
        let denom: BigInt = match den_text {
            Some(d) => d.parse().map_err(|_| invalid())?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(invalid());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types; use `checked_div` for a Result.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

/// Shorthand for `p/q` with machine-integer parts; panics if `q = 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["0", "7", "-7", "3/4", "-8/5", "123456789012345678901234567891/2"] {
            let q: Rational = text.parse().unwrap();
            assert_eq!(q.to_string(), text);
        }
    }

    #[test]
    fn parse_reduces() {
        let q: Rational = "6/8".parse().unwrap();
        assert_eq!(q, ratio(3, 4));
        assert_eq!(q.to_string(), "3/4");
        let z: Rational = "-0/5".parse().unwrap();
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn parse_rejects_malformed() {
        for text in ["", "-", "+1", "1/", "/2", "1/0", "1.5", "1e3", " 1", "1/-2", "--1", "1/2/3"] {
            assert!(text.parse::<Rational>().is_err(), "{text:?} should be rejected");
        }
    }

    #[test]
    fn rounding() {
        assert_eq!(ratio(5, 2).round_half_away(), BigInt::from(3));
        assert_eq!(ratio(-5, 2).round_half_away(), BigInt::from(-3));
        assert_eq!(ratio(7, 3).round_half_away(), BigInt::from(2));
        assert_eq!(ratio(-7, 3).floor(), BigInt::from(-3));
    }

    #[test]
    fn pow2_scaling() {
        assert_eq!(ratio(3, 4).mul_pow2(3), ratio(6, 1));
        assert_eq!(ratio(3, 4).mul_pow2(-1), ratio(3, 8));
    }
}
