use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::radicand::{square_decompose, squarefree_product};
use super::{ExactError, Radicand, Rational};

/// An element of `Q(sqrt(k1), sqrt(k2))`: `a + b*sqrt(k1) + c*sqrt(k2) + d*sqrt(m)`.
///
/// `m` is the squarefree part of `k1 * k2`. Every value has exactly one representation:
/// zero coefficients are dropped, the radicands that remain are the ones actually used,
/// and `k1 < k2` are the two smallest of them. Structural equality is therefore value
/// equality, and `is_zero` is exact because `1, sqrt(k1), sqrt(k2), sqrt(m)` are linearly
/// independent over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgNum {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    k1: Option<Radicand>,
    k2: Option<Radicand>,
}

type TermMap = BTreeMap<BigUint, Rational>;

impl AlgNum {
    pub fn zero() -> Self {
        AlgNum::default()
    }

    pub fn one() -> Self {
        AlgNum::from(Rational::one())
    }

    /// `coeff * sqrt(radicand)`.
    pub fn sqrt_term(coeff: Rational, radicand: &Radicand) -> Self {
        let mut terms = TermMap::new();
        terms.insert(radicand.value().clone(), coeff);
        Self::from_terms(terms).expect("single radicand never overflows")
    }

    /// Builds `a + b*sqrt(k1) + c*sqrt(k2) + d*sqrt(m)` and canonicalizes it.
    pub fn from_parts(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        k1: Option<Radicand>,
        k2: Option<Radicand>,
    ) -> Result<Self, ExactError> {
        let raw = AlgNum { a, b, c, d, k1, k2 };
        if (raw.k1.is_none() && !(raw.b.is_zero() && raw.d.is_zero()))
            || (raw.k2.is_none() && !(raw.c.is_zero() && raw.d.is_zero()))
        {
            return Err(ExactError::MissingRadicand);
        }
        Self::from_terms(raw.term_map())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficients `(a, b, c, d)`.
    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn k1(&self) -> Option<&Radicand> {
        self.k1.as_ref()
    }

    pub fn k2(&self) -> Option<&Radicand> {
        self.k2.as_ref()
    }

    /// The radicand `m` of the fourth basis element, when both `k1` and `k2` are present.
    pub fn m(&self) -> Option<Radicand> {
        self.product_basis().map(|(_, m)| m)
    }

    fn product_basis(&self) -> Option<(BigUint, Radicand)> {
        match (&self.k1, &self.k2) {
            (Some(k1), Some(k2)) => {
                let (g, m) = squarefree_product(k1.value(), k2.value());
                Some((g, Radicand::new_unchecked(m)))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.is_rational()
    }

    pub fn is_rational(&self) -> bool {
        self.k1.is_none()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// The distinct radicands this value uses (including `m` when its coefficient is nonzero).
    pub fn radicands(&self) -> Vec<Radicand> {
        self.term_map().into_keys().filter(|k| !k.is_one()).map(Radicand::new_unchecked).collect()
    }

    fn term_map(&self) -> TermMap {
        let mut terms = TermMap::new();
        let mut put = |k: BigUint, v: &Rational| {
            if !v.is_zero() {
                *terms.entry(k).or_insert_with(Rational::zero) += v;
            }
        };
        put(BigUint::one(), &self.a);
        if let Some(k1) = &self.k1 {
            put(k1.value().clone(), &self.b);
        }
        if let Some(k2) = &self.k2 {
            put(k2.value().clone(), &self.c);
        }
        if let Some((_, m)) = self.product_basis() {
            put(m.value().clone(), &self.d);
        }
        terms
    }

    /// Canonical form of a sparse `radicand -> coefficient` map (radicand 1 is the rational part).
    fn from_terms(mut terms: TermMap) -> Result<Self, ExactError> {
        terms.retain(|_, v| !v.is_zero());
        let a = terms.remove(&BigUint::one()).unwrap_or_default();
        let irrational: Vec<(BigUint, Rational)> = terms.into_iter().collect();
        match irrational.len() {
            0 => Ok(AlgNum::from(a)),
            1 => {
                let (k, b) = irrational.into_iter().next().unwrap();
                Ok(AlgNum {
                    a,
                    b,
                    c: Rational::zero(),
                    d: Rational::zero(),
                    k1: Some(Radicand::new_unchecked(k)),
                    k2: None,
                })
            }
            2 | 3 => {
                let mut it = irrational.into_iter();
                let (k1, b) = it.next().unwrap();
                let (k2, c) = it.next().unwrap();
                let d = match it.next() {
                    None => Rational::zero(),
                    Some((m, d)) => {
                        if squarefree_product(&k1, &k2).1 != m {
                            return Err(ExactError::RadicandOverflow);
                        }
                        d
                    }
                };
                Ok(AlgNum {
                    a,
                    b,
                    c,
                    d,
                    k1: Some(Radicand::new_unchecked(k1)),
                    k2: Some(Radicand::new_unchecked(k2)),
                })
            }
            _ => Err(ExactError::RadicandOverflow),
        }
    }

    /// Succeeds iff all `values` live in one field `Q(sqrt(k1), sqrt(k2))`, so that any
    /// arithmetic combining them cannot overflow.
    pub fn common_field<'a>(values: impl IntoIterator<Item = &'a AlgNum>) -> Result<(), ExactError> {
        let mut terms = TermMap::new();
        for v in values {
            for k in v.term_map().into_keys() {
                terms.insert(k, Rational::one());
            }
        }
        Self::from_terms(terms).map(|_| ())
    }

    pub fn checked_add(&self, rhs: &AlgNum) -> Result<AlgNum, ExactError> {
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.is_rational() && rhs.is_rational() {
            return Ok(AlgNum::from(&self.a + &rhs.a));
        }
        let mut terms = self.term_map();
        for (k, v) in rhs.term_map() {
            *terms.entry(k).or_insert_with(Rational::zero) += &v;
        }
        Self::from_terms(terms)
    }

    pub fn checked_sub(&self, rhs: &AlgNum) -> Result<AlgNum, ExactError> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &AlgNum) -> Result<AlgNum, ExactError> {
        if let Some(q) = rhs.as_rational() {
            return Ok(self.scale(q));
        }
        if let Some(q) = self.as_rational() {
            return Ok(rhs.scale(q));
        }
        let lhs_terms = self.term_map();
        let rhs_terms = rhs.term_map();
        let mut terms = TermMap::new();
        for (p, x) in &lhs_terms {
            for (q, y) in &rhs_terms {
                // sqrt(p) * sqrt(q) = g * sqrt(m)
                let (g, m) = squarefree_product(p, q);
                let coeff = x * y * Rational::from_integer(g);
                *terms.entry(m).or_insert_with(Rational::zero) += &coeff;
            }
        }
        Self::from_terms(terms)
    }

    pub fn square(&self) -> AlgNum {
        self.checked_mul(self).expect("squaring stays in the same basis")
    }

    /// Multiplication by a rational never leaves the basis.
    pub fn scale(&self, q: &Rational) -> AlgNum {
        if q.is_zero() {
            return AlgNum::zero();
        }
        AlgNum {
            a: &self.a * q,
            b: &self.b * q,
            c: &self.c * q,
            d: &self.d * q,
            k1: self.k1.clone(),
            k2: self.k2.clone(),
        }
    }

    pub fn add_rational(&self, q: &Rational) -> AlgNum {
        let mut out = self.clone();
        out.a += q;
        out
    }

    /// Image under the automorphism that flips the sign of `sqrt(k1)` and/or `sqrt(k2)`.
    pub fn conjugate(&self, flip_k1: bool, flip_k2: bool) -> AlgNum {
        let mut out = self.clone();
        if flip_k1 {
            out.b = -&out.b;
        }
        if flip_k2 {
            out.c = -&out.c;
        }
        if flip_k1 != flip_k2 {
            out.d = -&out.d;
        }
        out
    }

    /// Product of all Galois conjugates, a rational number.
    pub fn norm(&self) -> Rational {
        self.checked_mul(&self.conjugate_cofactor())
            .expect("conjugates share the basis")
            .as_rational()
            .cloned()
            .expect("norm is rational")
    }

    /// Product of the non-identity conjugates, so that `x * cofactor = norm(x)`.
    fn conjugate_cofactor(&self) -> AlgNum {
        let flips: &[(bool, bool)] = match (&self.k1, &self.k2) {
            (None, _) => &[],
            (Some(_), None) => &[(true, false)],
            (Some(_), Some(_)) => &[(true, false), (false, true), (true, true)],
        };
        flips.iter().fold(AlgNum::one(), |acc, &(f1, f2)| {
            acc.checked_mul(&self.conjugate(f1, f2)).expect("conjugates share the basis")
        })
    }

    pub fn inverse(&self) -> Result<AlgNum, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(AlgNum::from(q.recip()?));
        }
        let cofactor = self.conjugate_cofactor();
        let norm = self.checked_mul(&cofactor)?;
        let norm = norm.as_rational().expect("norm is rational");
        Ok(cofactor.scale(&norm.recip()?))
    }

    pub fn checked_div(&self, rhs: &AlgNum) -> Result<AlgNum, ExactError> {
        if let Some(q) = rhs.as_rational() {
            return Ok(self.scale(&q.recip()?));
        }
        self.checked_mul(&rhs.inverse()?)
    }

    /// Exact square root of a nonnegative rational, as `s * sqrt(k)` with `k` squarefree.
    pub fn sqrt_rational(q: &Rational) -> Result<AlgNum, ExactError> {
        if q.signum() < 0 {
            return Err(ExactError::NegativeRadicand(q.to_string()));
        }
        if q.is_zero() {
            return Ok(AlgNum::zero());
        }
        // sqrt(n/d) with n = s1^2 k1 and d = s2^2 k2, gcd(k1, k2) = 1:
        // sqrt(n/d) = s1 / (s2 k2) * sqrt(k1 k2)
        let (n, d) = q.abs_parts();
        let (s1, k1) = square_decompose(&n);
        let (s2, k2) = square_decompose(&d);
        let coeff = Rational::new(
            num_bigint::BigInt::from(s1),
            num_bigint::BigInt::from(s2 * &k2),
        )?;
        let k = k1 * k2;
        if k.is_one() {
            Ok(AlgNum::from(coeff))
        } else {
            Ok(AlgNum::sqrt_term(coeff, &Radicand::new_unchecked(k)))
        }
    }

    /// Square root of a value that must itself be a nonnegative rational.
    pub fn sqrt(&self) -> Result<AlgNum, ExactError> {
        match self.as_rational() {
            Some(q) => AlgNum::sqrt_rational(q),
            None => Err(ExactError::NestedRadical(self.to_string())),
        }
    }
}

impl From<Rational> for AlgNum {
    fn from(a: Rational) -> Self {
        AlgNum { a, ..AlgNum::default() }
    }
}

impl From<&Rational> for AlgNum {
    fn from(a: &Rational) -> Self {
        AlgNum::from(a.clone())
    }
}

impl From<i64> for AlgNum {
    fn from(n: i64) -> Self {
        AlgNum::from(Rational::from(n))
    }
}

impl Neg for &AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
            k1: self.k1.clone(),
            k2: self.k2.clone(),
        }
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        -&self
    }
}

/// `a + b*sqrt(k1) + c*sqrt(k2) + d*sqrt(m)` with zero terms omitted; `0` for zero.
impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::with_capacity(4);
        if !self.a.is_zero() {
            parts.push(self.a.to_string());
        }
        let m = self.m();
        let irr = [(&self.b, self.k1.as_ref()), (&self.c, self.k2.as_ref()), (&self.d, m.as_ref())];
        for (coeff, radicand) in irr {
            if let (false, Some(k)) = (coeff.is_zero(), radicand) {
                parts.push(format!("{coeff}*sqrt({k})"));
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgNum({self})")
    }
}

impl FromStr for AlgNum {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || ExactError::InvalidLiteral(s.to_string());
        let mut terms = TermMap::new();
        for part in s.split(" + ") {
            let (coeff, radicand) = match part.split_once("*sqrt(") {
                None => (part.parse::<Rational>()?, BigUint::one()),
                Some((coeff, rest)) => {
                    let digits = rest.strip_suffix(')').ok_or_else(invalid)?;
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(invalid());
                    }
                    let n: BigUint = digits.parse().map_err(|_| invalid())?;
                    if n.is_zero() {
                        return Err(invalid());
                    }
                    let (root, k) = square_decompose(&n);
                    let coeff = coeff.parse::<Rational>()? * Rational::from_integer(root);
                    (coeff, k)
                }
            };
            *terms.entry(radicand).or_insert_with(Rational::zero) += &coeff;
        }
        AlgNum::from_terms(terms)
    }
}
