use super::{Circle, GeomResult, Line, Point};

/// `a1*b2 - a2*b1 = 0`.
pub fn is_parallel(l1: &Line, l2: &Line) -> GeomResult<bool> {
    Ok(l1.normal().cross(&l2.normal())?.is_zero())
}

/// `a1*a2 + b1*b2 = 0`.
pub fn is_perpendicular(l1: &Line, l2: &Line) -> GeomResult<bool> {
    Ok(l1.normal().dot(&l2.normal())?.is_zero())
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> GeomResult<bool> {
    Ok(q.sub(p)?.cross(&r.sub(p)?)?.is_zero())
}

pub fn on_line(p: &Point, l: &Line) -> GeomResult<bool> {
    Ok(l.eval(p)?.is_zero())
}

pub fn on_circle(p: &Point, circle: &Circle) -> GeomResult<bool> {
    let offset = p.sub(circle.center())?;
    Ok(offset.norm_squared()? == circle.radius().square())
}

/// Sign of `a*x + b*y + c` at `p`.
pub fn side_of(l: &Line, p: &Point) -> GeomResult<i8> {
    Ok(l.eval(p)?.sign())
}

/// `(a*x0 + b*y0 + c)^2 = r^2 (a^2 + b^2)`: squared distance form, no radical introduced.
pub fn is_tangent(l: &Line, circle: &Circle) -> GeomResult<bool> {
    let t = l.eval(circle.center())?;
    let rhs = circle.radius().square().checked_mul(&l.normal().norm_squared()?)?;
    Ok(t.square() == rhs)
}
