//! Exact plane primitives over [`AlgNum`] coordinates.
//!
//! Lines are kept in implicit form `a*x + b*y + c = 0`, so incidence, parallelism,
//! perpendicularity and tangency are all polynomial identities in the coefficients and
//! never need a normalizing square root.

mod intersect;
mod predicates;
mod tangents;
mod transform;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exactnum::{AlgNum, ExactError};

pub use intersect::{line_circle_intersections, line_intersection, perpendicular_foot, second_intersection};
pub use predicates::{collinear, is_parallel, is_perpendicular, is_tangent, on_circle, on_line, side_of};
pub use tangents::{classify_pair, common_tangents, CommonTangents, PairClass, TangentKind, TangencyWitness};
pub use transform::{homothety, reflect};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("line coefficients a and b are both zero")]
    DegenerateLine,
    #[error("circle radius must be positive")]
    NonpositiveRadius,
    #[error("homothety ratio must be nonzero")]
    ZeroRatio,
    #[error("point does not lie on both the line and the circle")]
    PointNotIncident,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("circles are not separate ({0})")]
    NotSeparate(PairClass),
    #[error("tangent witness failed validation")]
    InvalidWitness,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl GeomError {
    pub fn code(&self) -> &'static str {
        match self {
            GeomError::CoincidentPoints => "COINCIDENT_POINTS",
            GeomError::DegenerateLine => "DEGENERATE_LINE",
            GeomError::NonpositiveRadius => "NONPOSITIVE_RADIUS",
            GeomError::ZeroRatio => "ZERO_RATIO",
            GeomError::PointNotIncident => "POINT_NOT_INCIDENT",
            GeomError::ParallelLines => "PARALLEL_LINES",
            GeomError::NotSeparate(_) => "NOT_SEPARATE",
            GeomError::InvalidWitness => "INVALID_WITNESS",
            GeomError::Exact(e) => e.code(),
        }
    }
}

pub type GeomResult<T> = Result<T, GeomError>;

/// A point, also used as a displacement vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: AlgNum,
    pub y: AlgNum,
}

impl Point {
    pub fn new(x: impl Into<AlgNum>, y: impl Into<AlgNum>) -> Self {
        Point { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        Point::new(AlgNum::zero(), AlgNum::zero())
    }

    pub fn add(&self, other: &Point) -> GeomResult<Point> {
        Ok(Point { x: self.x.checked_add(&other.x)?, y: self.y.checked_add(&other.y)? })
    }

    pub fn sub(&self, other: &Point) -> GeomResult<Point> {
        Ok(Point { x: self.x.checked_sub(&other.x)?, y: self.y.checked_sub(&other.y)? })
    }

    pub fn scale(&self, k: &AlgNum) -> GeomResult<Point> {
        Ok(Point { x: self.x.checked_mul(k)?, y: self.y.checked_mul(k)? })
    }

    pub fn dot(&self, other: &Point) -> GeomResult<AlgNum> {
        Ok(self.x.checked_mul(&other.x)?.checked_add(&self.y.checked_mul(&other.y)?)?)
    }

    pub fn cross(&self, other: &Point) -> GeomResult<AlgNum> {
        Ok(self.x.checked_mul(&other.y)?.checked_sub(&self.y.checked_mul(&other.x)?)?)
    }

    pub fn norm_squared(&self) -> GeomResult<AlgNum> {
        self.dot(self)
    }

    /// Rotation by +90 degrees.
    pub fn perp(&self) -> Point {
        Point { x: -&self.y, y: self.x.clone() }
    }

    /// Lexicographic by `(x, y)` with exact comparison.
    pub fn cmp_lex(&self, other: &Point) -> GeomResult<Ordering> {
        Ok(self.x.cmp_exact(&other.x)?.then(self.y.cmp_exact(&other.y)?))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point{self}")
    }
}

/// `a*x + b*y + c = 0`, scaled so that the first nonzero of `(a, b)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    a: AlgNum,
    b: AlgNum,
    c: AlgNum,
}

impl Line {
    pub fn new(a: impl Into<AlgNum>, b: impl Into<AlgNum>, c: impl Into<AlgNum>) -> GeomResult<Line> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(GeomError::DegenerateLine);
        };
        if lead == AlgNum::one() {
            return Ok(Line { a, b, c });
        }
        let inv = lead.inverse()?;
        Ok(Line { a: a.checked_mul(&inv)?, b: b.checked_mul(&inv)?, c: c.checked_mul(&inv)? })
    }

    pub fn through(p: &Point, q: &Point) -> GeomResult<Line> {
        if p == q {
            return Err(GeomError::CoincidentPoints);
        }
        let a = p.y.checked_sub(&q.y)?;
        let b = q.x.checked_sub(&p.x)?;
        let c = -(a.checked_mul(&p.x)?.checked_add(&b.checked_mul(&p.y)?)?);
        Line::new(a, b, c)
    }

    /// The line `y = 0`.
    pub fn x_axis() -> Line {
        Line { a: AlgNum::zero(), b: AlgNum::one(), c: AlgNum::zero() }
    }

    /// The line `x = 0`.
    pub fn y_axis() -> Line {
        Line { a: AlgNum::one(), b: AlgNum::zero(), c: AlgNum::zero() }
    }

    pub fn a(&self) -> &AlgNum {
        &self.a
    }

    pub fn b(&self) -> &AlgNum {
        &self.b
    }

    pub fn c(&self) -> &AlgNum {
        &self.c
    }

    /// Normal vector `(a, b)`.
    pub fn normal(&self) -> Point {
        Point { x: self.a.clone(), y: self.b.clone() }
    }

    /// Direction vector `(-b, a)`.
    pub fn direction(&self) -> Point {
        self.normal().perp()
    }

    /// `a*x + b*y + c`.
    pub fn eval(&self, p: &Point) -> GeomResult<AlgNum> {
        Ok(self.normal().dot(p)?.checked_add(&self.c)?)
    }

    /// Lexicographic by `(a, b, c)`.
    pub fn cmp_coefficients(&self, other: &Line) -> GeomResult<Ordering> {
        Ok(self
            .a
            .cmp_exact(&other.a)?
            .then(self.b.cmp_exact(&other.b)?)
            .then(self.c.cmp_exact(&other.c)?))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*x + ({})*y + ({}) = 0", self.a, self.b, self.c)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line[{self}]")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Circle {
    center: Point,
    radius: AlgNum,
}

impl Circle {
    pub fn new(center: Point, radius: impl Into<AlgNum>) -> GeomResult<Circle> {
        let radius = radius.into();
        if radius.sign() <= 0 {
            return Err(GeomError::NonpositiveRadius);
        }
        Ok(Circle { center, radius })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> &AlgNum {
        &self.radius
    }
}

/// Line through two distinct points.
pub fn line_through(p: &Point, q: &Point) -> GeomResult<Line> {
    Line::through(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn line_through_examples() {
        let l = line_through(&pt(0, 2), &pt(-1, 0)).unwrap();
        // x - y/2 + 1 = 0
        assert_eq!(l, Line::new(1, ratio(-1, 2), 1).unwrap());
        assert_eq!(line_through(&pt(0, 0), &pt(1, 0)).unwrap(), Line::x_axis());
        assert_eq!(line_through(&pt(1, 1), &pt(1, 1)), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn canonical_scaling() {
        let l = Line::new(0, 3, -6).unwrap();
        assert_eq!(l.b(), &AlgNum::one());
        assert_eq!(l.c(), &AlgNum::from(-2));
        assert_eq!(Line::new(0, 0, 1), Err(GeomError::DegenerateLine));
        let root2: AlgNum = "1*sqrt(2)".parse().unwrap();
        let l = Line::new(root2.clone(), 2, 0).unwrap();
        assert_eq!(l.a(), &AlgNum::one());
        assert_eq!(l.b(), &root2);
    }

    #[test]
    fn circle_radius_must_be_positive() {
        assert_eq!(Circle::new(pt(0, 0), 0).unwrap_err(), GeomError::NonpositiveRadius);
        assert_eq!(Circle::new(pt(0, 0), -1).unwrap_err(), GeomError::NonpositiveRadius);
    }
}
