//! Shared oracles and generators for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use sangaku::exactnum::{ratio, AlgNum, Radicand, Rational};
use sangaku::hirotaka::Lcg64;

/// Squarefree radicands the generators draw from.
pub const RADICANDS: [u32; 10] = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15];

pub fn small_rational(rng: &mut Lcg64, bound: u64) -> Rational {
    let p = rng.between_one_and(2 * bound + 1) as i64 - bound as i64 - 1;
    let q = rng.between_one_and(bound) as i64;
    ratio(p, q)
}

/// Two distinct radicands `k1 < k2`.
pub fn field(rng: &mut Lcg64) -> (u32, u32) {
    loop {
        let i = rng.between_one_and(RADICANDS.len() as u64) as usize - 1;
        let j = rng.between_one_and(RADICANDS.len() as u64) as usize - 1;
        if i != j {
            return (RADICANDS[i.min(j)], RADICANDS[i.max(j)]);
        }
    }
}

/// A random element of `Q(sqrt k1, sqrt k2)`, some coefficients zeroed.
pub fn element(rng: &mut Lcg64, (k1, k2): (u32, u32)) -> AlgNum {
    let mut coeff = || {
        if rng.between_one_and(4) == 1 {
            Rational::zero()
        } else {
            small_rational(rng, 40)
        }
    };
    let (a, b, c, d) = (coeff(), coeff(), coeff(), coeff());
    AlgNum::from_parts(a, b, c, d, Some(Radicand::new(k1).unwrap()), Some(Radicand::new(k2).unwrap()))
        .unwrap()
}

/// `p - q sqrt 2` for the `n`-th solution of `p^2 - 2 q^2 = +-1`, tiny but nonzero.
pub fn pell_gap(n: usize) -> AlgNum {
    let (mut p, mut q) = (BigInt::one(), BigInt::one());
    for _ in 0..n {
        let next = (&p + &q * 2, &p + &q);
        p = next.0;
        q = next.1;
    }
    let two = Radicand::new(2u32).unwrap();
    AlgNum::from(Rational::from(p)).checked_sub(&AlgNum::sqrt_term(Rational::from(q), &two)).unwrap()
}

/// Nonzero samples: nine in ten generic, one in ten a near-cancelling Pell gap.
pub fn nonzero_samples(seed: u64, n: usize) -> Vec<AlgNum> {
    let mut rng = Lcg64::new(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = if out.len() % 10 == 9 {
            let gap = pell_gap(rng.between_one_and(60) as usize);
            if rng.between_one_and(2) == 1 { gap } else { -gap }
        } else {
            let f = field(&mut rng);
            element(&mut rng, f)
        };
        if !x.is_zero() {
            out.push(x);
        }
    }
    out
}

/// Sign of `x` from 100-digit decimal truncations of each square root, or `None` when the
/// resulting interval straddles zero.
pub fn decimal_sign(x: &AlgNum) -> Option<i8> {
    static ROOTS: OnceLock<Mutex<HashMap<BigUint, (Rational, Rational)>>> = OnceLock::new();
    let root_bounds = |k: &BigUint| {
        let mut cache = ROOTS.get_or_init(Default::default).lock().unwrap();
        cache
            .entry(k.clone())
            .or_insert_with(|| {
                let scale = BigUint::from(10u32).pow(100);
                let lo = (k * &scale * &scale).sqrt();
                let hi = &lo + 1u32;
                let s = Rational::from(BigInt::from(scale));
                (Rational::from(BigInt::from(lo)) / &s, Rational::from(BigInt::from(hi)) / &s)
            })
            .clone()
    };
    let [a, b, c, d] = x.coefficients();
    let mut lo = a.clone();
    let mut hi = a.clone();
    let radicals = [(b, x.k1().map(|k| k.value().clone())), (c, x.k2().map(|k| k.value().clone())), (d, x.m().map(|k| k.value().clone()))];
    for (coef, k) in radicals {
        let Some(k) = k else { continue };
        if coef.is_zero() {
            continue;
        }
        let (rlo, rhi) = root_bounds(&k);
        let (p, q) = (coef * &rlo, coef * &rhi);
        if p <= q {
            lo += &p;
            hi += &q;
        } else {
            lo += &q;
            hi += &p;
        }
    }
    if lo.signum() > 0 {
        Some(1)
    } else if hi.signum() < 0 {
        Some(-1)
    } else {
        None
    }
}

/// Second intersection of the line through `known` with direction `v` and the circle
/// `(center, r)`, by substituting `known + t v`: the quadratic has roots `0` and `-B/A`.
pub fn vieta_oracle(known: (Rational, Rational), v: (Rational, Rational), center: (Rational, Rational), r: &Rational) -> (Rational, Rational) {
    let (px, py) = known;
    let (vx, vy) = v;
    let (cx, cy) = center;
    let a = vx.square() + vy.square();
    let b = (vx.clone() * (px.clone() - cx.clone()) + vy.clone() * (py.clone() - cy.clone())) * Rational::from(2);
    let c0 = (px.clone() - cx).square() + (py.clone() - cy).square() - r.square();
    assert!(c0.is_zero(), "known point must lie on the circle");
    let t = -(b / a);
    (px + t.clone() * vx, py + t * vy)
}

pub fn rat(x: &AlgNum) -> Rational {
    x.as_rational().expect("rational coordinate").clone()
}

/// `x` is zero up to float noise, relative to `scale`.
pub fn is_tiny(x: f64, scale: f64) -> bool {
    x.abs() <= 1e-9 * scale.max(1.0)
}
