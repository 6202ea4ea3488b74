use crate::exactnum::AlgNum;

use super::{GeomError, GeomResult, Line, Point};

/// Mirror image of `p` across `l`.
pub fn reflect(p: &Point, l: &Line) -> GeomResult<Point> {
    let n = l.normal();
    let t = l.eval(p)?;
    if t.is_zero() {
        return Ok(p.clone());
    }
    let k = t.checked_mul(&AlgNum::from(2))?.checked_div(&n.norm_squared()?)?;
    p.sub(&n.scale(&k)?)
}

/// `center + ratio * (p - center)`.
pub fn homothety(center: &Point, ratio: &AlgNum, p: &Point) -> GeomResult<Point> {
    if ratio.is_zero() {
        return Err(GeomError::ZeroRatio);
    }
    center.add(&p.sub(center)?.scale(ratio)?)
}
