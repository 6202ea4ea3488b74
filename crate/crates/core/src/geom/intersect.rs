use std::cmp::Ordering;

use crate::exactnum::AlgNum;

use super::predicates::{on_circle, on_line};
use super::{Circle, GeomError, GeomResult, Line, Point};

pub fn line_intersection(l1: &Line, l2: &Line) -> GeomResult<Point> {
    let det = l1.normal().cross(&l2.normal())?;
    if det.is_zero() {
        return Err(GeomError::ParallelLines);
    }
    let x = l1.b().checked_mul(l2.c())?.checked_sub(&l2.b().checked_mul(l1.c())?)?;
    let y = l1.c().checked_mul(l2.a())?.checked_sub(&l2.c().checked_mul(l1.a())?)?;
    Ok(Point { x: x.checked_div(&det)?, y: y.checked_div(&det)? })
}

/// Orthogonal projection of `p` onto `l`.
pub fn perpendicular_foot(p: &Point, l: &Line) -> GeomResult<Point> {
    let n = l.normal();
    let k = l.eval(p)?.checked_div(&n.norm_squared()?)?;
    p.sub(&n.scale(&k)?)
}

/// Intersection points in lexicographic `(x, y)` order.
///
/// With `t = a*x0 + b*y0 + c` and `n2 = a^2 + b^2`, the count follows the sign of
/// `r^2 n2 - t^2`. Two points need `sqrt(r^2 n2 - t^2)`, which must be rational in the
/// current field; otherwise the result is `NestedRadical`.
pub fn line_circle_intersections(l: &Line, circle: &Circle) -> GeomResult<Vec<Point>> {
    let t = l.eval(circle.center())?;
    let n2 = l.normal().norm_squared()?;
    let disc = circle.radius().square().checked_mul(&n2)?.checked_sub(&t.square())?;
    let foot = perpendicular_foot(circle.center(), l)?;
    match disc.sign() {
        -1 => Ok(Vec::new()),
        0 => Ok(vec![foot]),
        _ => {
            let step = disc.sqrt()?.checked_div(&n2)?;
            let offset = l.direction().scale(&step)?;
            let p = foot.add(&offset)?;
            let q = foot.sub(&offset)?;
            if p.cmp_lex(&q)? == Ordering::Less {
                Ok(vec![p, q])
            } else {
                Ok(vec![q, p])
            }
        }
    }
}

/// The other intersection of `l` with `circle`, given one intersection `known`.
///
/// Both roots sit symmetrically about the perpendicular foot (the root sum of the
/// quadratic), so the answer is `2 * foot - known` and stays in the field of the inputs.
/// A tangent line returns `known` itself.
pub fn second_intersection(l: &Line, circle: &Circle, known: &Point) -> GeomResult<Point> {
    if !on_line(known, l)? || !on_circle(known, circle)? {
        return Err(GeomError::PointNotIncident);
    }
    let foot = perpendicular_foot(circle.center(), l)?;
    foot.scale(&AlgNum::from(2))?.sub(known)
}
