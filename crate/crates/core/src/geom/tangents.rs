use std::cmp::Ordering;
use std::fmt;

use super::predicates::{is_tangent, on_circle, on_line, side_of};
use super::{Circle, GeomError, GeomResult, Line, Point};

/// Relative position of two circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    Separate,
    ExternallyTangent,
    Overlapping,
    InternallyTangent,
    Contained,
    ConcentricOrEqual,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::Separate => "separate",
            PairClass::ExternallyTangent => "externally_tangent",
            PairClass::Overlapping => "overlapping",
            PairClass::InternallyTangent => "internally_tangent",
            PairClass::Contained => "contained",
            PairClass::ConcentricOrEqual => "concentric_or_equal",
        })
    }
}

/// Compares `d^2` with `(r1 + r2)^2` and `(r1 - r2)^2`.
pub fn classify_pair(c1: &Circle, c2: &Circle) -> GeomResult<PairClass> {
    if c1.center() == c2.center() {
        return Ok(PairClass::ConcentricOrEqual);
    }
    let d2 = c2.center().sub(c1.center())?.norm_squared()?;
    let outer = c1.radius().checked_add(c2.radius())?.square();
    let inner = c1.radius().checked_sub(c2.radius())?.square();
    Ok(match d2.cmp_exact(&outer)? {
        Ordering::Greater => PairClass::Separate,
        Ordering::Equal => PairClass::ExternallyTangent,
        Ordering::Less => match d2.cmp_exact(&inner)? {
            Ordering::Greater => PairClass::Overlapping,
            Ordering::Equal => PairClass::InternallyTangent,
            Ordering::Less => PairClass::Contained,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TangentKind {
    /// Both centers strictly on the same side.
    External,
    /// Centers strictly on opposite sides.
    Internal,
}

impl fmt::Display for TangentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TangentKind::External => "external",
            TangentKind::Internal => "internal",
        })
    }
}

/// A common tangent line with its touching point on each circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangencyWitness {
    line: Line,
    point1: Point,
    point2: Point,
    kind: TangentKind,
}

impl TangencyWitness {
    /// Checks every invariant exactly: tangency, incidence of both points, and side signs.
    pub fn new(
        line: Line,
        point1: Point,
        point2: Point,
        kind: TangentKind,
        c1: &Circle,
        c2: &Circle,
    ) -> GeomResult<Self> {
        let touches = |p: &Point, c: &Circle| -> GeomResult<bool> {
            Ok(is_tangent(&line, c)? && on_line(p, &line)? && on_circle(p, c)?)
        };
        if !touches(&point1, c1)? || !touches(&point2, c2)? {
            return Err(GeomError::InvalidWitness);
        }
        let sides = side_of(&line, c1.center())? * side_of(&line, c2.center())?;
        let expected = match kind {
            TangentKind::External => 1,
            TangentKind::Internal => -1,
        };
        if sides != expected {
            return Err(GeomError::InvalidWitness);
        }
        Ok(TangencyWitness { line, point1, point2, kind })
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    /// Touching point on the first circle.
    pub fn point1(&self) -> &Point {
        &self.point1
    }

    /// Touching point on the second circle.
    pub fn point2(&self) -> &Point {
        &self.point2
    }

    pub fn kind(&self) -> TangentKind {
        self.kind
    }
}

/// The four common tangents of a separate pair, each pair ordered by line coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonTangents {
    pub external: [TangencyWitness; 2],
    pub internal: [TangencyWitness; 2],
}

impl CommonTangents {
    pub fn all(&self) -> impl Iterator<Item = &TangencyWitness> {
        self.external.iter().chain(self.internal.iter())
    }
}

/// All four common tangents of two separate circles.
///
/// With `u = P2 - P1` and signed distances `s1 = r1`, `s2 = r2` (external) or `s2 = -r2`
/// (internal), a unit normal `n` must satisfy `n . u = s2 - s1 = delta`, giving
/// `n = (delta u +- sqrt(|u|^2 - delta^2) u_perp) / |u|^2`. The tangent points are the
/// perpendicular feet `Pi - si n`. Only `sqrt(d^2 - (r1 -+ r2)^2)` is introduced, and the
/// equal-radius external case (`delta = 0`) needs no special handling.
pub fn common_tangents(c1: &Circle, c2: &Circle) -> GeomResult<CommonTangents> {
    let class = classify_pair(c1, c2)?;
    if class != PairClass::Separate {
        return Err(GeomError::NotSeparate(class));
    }
    let (p1, p2) = (c1.center(), c2.center());
    let (r1, r2) = (c1.radius(), c2.radius());
    let u = p2.sub(p1)?;
    let u_perp = u.perp();
    let d2 = u.norm_squared()?;

    let pair = |kind: TangentKind| -> GeomResult<[TangencyWitness; 2]> {
        let s2 = match kind {
            TangentKind::External => r2.clone(),
            TangentKind::Internal => -r2,
        };
        let delta = s2.checked_sub(r1)?;
        let root = d2.checked_sub(&delta.square())?.sqrt()?;
        let along = u.scale(&delta)?;
        let mut out = Vec::with_capacity(2);
        for across in [u_perp.scale(&root)?, u_perp.scale(&-&root)?] {
            let n = along.add(&across)?.scale(&d2.inverse()?)?;
            let c = r1.checked_sub(&n.dot(p1)?)?;
            let line = Line::new(n.x.clone(), n.y.clone(), c)?;
            let t1 = p1.sub(&n.scale(r1)?)?;
            let t2 = p2.sub(&n.scale(&s2)?)?;
            out.push(TangencyWitness::new(line, t1, t2, kind, c1, c2)?);
        }
        if out[0].line.cmp_coefficients(&out[1].line)? == Ordering::Greater {
            out.swap(0, 1);
        }
        let [w0, w1]: [TangencyWitness; 2] = out.try_into().expect("two witnesses");
        Ok([w0, w1])
    };

    Ok(CommonTangents { external: pair(TangentKind::External)?, internal: pair(TangentKind::Internal)? })
}
