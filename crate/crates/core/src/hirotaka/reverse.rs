//! The converse: for a general pair of separate circles, the eight tangent points lie on
//! two lines exactly when the internal and external tangents are pairwise perpendicular,
//! and exactly when `d^2 = 2 (r1^2 + r2^2)`.
//!
//! Pairs are placed on the symmetry axis: centers `(0, 0)` and `(d, 0)`.

use crate::exactnum::{AlgNum, ExactError, Rational};
use crate::geom::{
    collinear, common_tangents, is_parallel, is_perpendicular, Circle, CommonTangents, GeomError, GeomResult,
    Line, Point, TangencyWitness,
};

use super::HirotakaError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirclePair {
    r1: Rational,
    r2: Rational,
    d: AlgNum,
    d_squared: Rational,
    circle1: Circle,
    circle2: Circle,
    tangents: CommonTangents,
}

impl CirclePair {
    pub fn r1(&self) -> &Rational {
        &self.r1
    }

    pub fn r2(&self) -> &Rational {
        &self.r2
    }

    /// Center distance; irrational when the pair was built from `d^2`.
    pub fn d(&self) -> &AlgNum {
        &self.d
    }

    pub fn d_squared(&self) -> &Rational {
        &self.d_squared
    }

    pub fn circle1(&self) -> &Circle {
        &self.circle1
    }

    pub fn circle2(&self) -> &Circle {
        &self.circle2
    }

    pub fn tangents(&self) -> &CommonTangents {
        &self.tangents
    }

    /// Witnesses in the order external, external, internal, internal.
    pub fn witnesses(&self) -> [&TangencyWitness; 4] {
        let t = &self.tangents;
        [&t.external[0], &t.external[1], &t.internal[0], &t.internal[1]]
    }

    /// The eight tangent points grouped by witness: `[point on circle 1, point on circle 2]`.
    pub fn tangent_points(&self) -> [[&Point; 2]; 4] {
        self.witnesses().map(|w| [w.point1(), w.point2()])
    }

    /// `d^2 - (r1 - r2)^2`, the radicand of the external tangents.
    pub fn external_radicand(&self) -> Rational {
        &self.d_squared - (&self.r1 - &self.r2).square()
    }

    /// `d^2 - (r1 + r2)^2`, the radicand of the internal tangents.
    pub fn internal_radicand(&self) -> Rational {
        &self.d_squared - (&self.r1 + &self.r2).square()
    }
}

/// Canonical pair with a rational center distance.
pub fn make_pair(r1: &Rational, r2: &Rational, d: &Rational) -> Result<CirclePair, HirotakaError> {
    if d.signum() <= 0 {
        return Err(HirotakaError::NonpositiveInput);
    }
    build_pair(r1, r2, AlgNum::from(d), d.square())
}

/// Canonical pair given the squared center distance, for distances like `sqrt(10)`.
pub fn make_pair_squared(r1: &Rational, r2: &Rational, d_squared: &Rational) -> Result<CirclePair, HirotakaError> {
    if d_squared.signum() <= 0 {
        return Err(HirotakaError::NonpositiveInput);
    }
    let d = AlgNum::sqrt_rational(d_squared).map_err(GeomError::from)?;
    build_pair(r1, r2, d, d_squared.clone())
}

fn build_pair(r1: &Rational, r2: &Rational, d: AlgNum, d_squared: Rational) -> Result<CirclePair, HirotakaError> {
    if r1.signum() <= 0 || r2.signum() <= 0 {
        return Err(HirotakaError::NonpositiveInput);
    }
    if d_squared <= (r1 + r2).square() {
        return Err(HirotakaError::NotSeparate);
    }
    let circle1 = Circle::new(Point::origin(), r1.clone())?;
    let circle2 = Circle::new(Point::new(d.clone(), AlgNum::zero()), r2.clone())?;
    let tangents = common_tangents(&circle1, &circle2)?;
    // every later check mixes all eight points, so they must share one field
    let coords = tangents.all().flat_map(|w| [w.point1(), w.point2()]).flat_map(|p| [&p.x, &p.y]);
    AlgNum::common_field(coords).map_err(GeomError::from)?;
    Ok(CirclePair { r1: r1.clone(), r2: r2.clone(), d, d_squared, circle1, circle2, tangents })
}

fn exact<T>(r: GeomResult<T>) -> T {
    r.expect("tangent points share one field, checked when the pair was built")
}

fn quadruple_collinear(pts: &[&Point; 4]) -> GeomResult<bool> {
    Ok(collinear(pts[0], pts[1], pts[2])? && collinear(pts[0], pts[1], pts[3])?)
}

/// If the eight tangent points split into two collinear quadruples, each taking one point
/// from every tangent line, returns the two carrier lines.
///
/// A grouping picks, for every witness, which of its two points joins the first quadruple.
/// Fixing the choice for the first witness removes the swap symmetry, leaving 8 candidates.
pub fn collinear_quadruples(pair: &CirclePair) -> Option<(Line, Line)> {
    let pts = pair.tangent_points();
    for mask in 0u8..8 {
        let pick = |w: usize| -> usize {
            if w == 0 {
                0
            } else {
                ((mask >> (w - 1)) & 1) as usize
            }
        };
        let first: [&Point; 4] = std::array::from_fn(|w| pts[w][pick(w)]);
        let second: [&Point; 4] = std::array::from_fn(|w| pts[w][1 - pick(w)]);
        if exact(quadruple_collinear(&first)) && exact(quadruple_collinear(&second)) {
            let l1 = exact(Line::through(first[0], first[1]));
            let l2 = exact(Line::through(second[0], second[1]));
            return Some((l1, l2));
        }
    }
    None
}

pub fn collinearity_check(pair: &CirclePair) -> bool {
    collinear_quadruples(pair).is_some()
}

/// Each internal tangent is perpendicular to exactly one external tangent, and the two
/// internal tangents use different external partners.
pub fn perpendicularity_check(pair: &CirclePair) -> bool {
    let t = &pair.tangents;
    let perp = |i: usize, e: usize| exact(is_perpendicular(t.internal[i].line(), t.external[e].line()));
    let straight = perp(0, 0) && perp(1, 1) && !perp(0, 1) && !perp(1, 0);
    let crossed = perp(0, 1) && perp(1, 0) && !perp(0, 0) && !perp(1, 1);
    straight || crossed
}

/// `d^2 = 2 (r1^2 + r2^2)`.
pub fn criterion_check(r1: &Rational, r2: &Rational, d: &Rational) -> bool {
    criterion_check_squared(r1, r2, &d.square())
}

pub fn criterion_check_squared(r1: &Rational, r2: &Rational, d_squared: &Rational) -> bool {
    *d_squared == (r1.square() + r2.square()) * Rational::from(2)
}

/// The chord through the two external tangent points on circle 1 is parallel to the chord
/// through the two external tangent points on circle 2.
pub fn parallel_chords_check(pair: &CirclePair) -> bool {
    let [e0, e1] = &pair.tangents.external;
    let chord1 = exact(Line::through(e0.point1(), e1.point1()));
    let chord2 = exact(Line::through(e0.point2(), e1.point2()));
    exact(is_parallel(&chord1, &chord2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub collinear_quadruples: bool,
    pub tangent_pairs_perpendicular: bool,
    pub criterion_d2_eq_2r2: bool,
    /// Whether the two carrier lines are perpendicular; `None` when there are no such lines.
    pub lines_perpendicular_when_collinear: Option<bool>,
    pub consistent: bool,
    pub quadruple_lines: Option<(Line, Line)>,
}

impl EquivalenceReport {
    pub fn flags(&self) -> Vec<(&'static str, bool)> {
        let mut out = vec![
            ("collinear_quadruples", self.collinear_quadruples),
            ("tangent_pairs_perpendicular", self.tangent_pairs_perpendicular),
            ("criterion_d2_eq_2r2", self.criterion_d2_eq_2r2),
        ];
        if let Some(v) = self.lines_perpendicular_when_collinear {
            out.push(("lines_perpendicular_when_collinear", v));
        }
        out.push(("consistent", self.consistent));
        out
    }
}

pub fn equivalence_check(pair: &CirclePair) -> EquivalenceReport {
    let quadruple_lines = collinear_quadruples(pair);
    let collinear = quadruple_lines.is_some();
    let perpendicular = perpendicularity_check(pair);
    let criterion = criterion_check_squared(&pair.r1, &pair.r2, &pair.d_squared);
    let lines_perpendicular = quadruple_lines.as_ref().map(|(l1, l2)| exact(is_perpendicular(l1, l2)));
    EquivalenceReport {
        collinear_quadruples: collinear,
        tangent_pairs_perpendicular: perpendicular,
        criterion_d2_eq_2r2: criterion,
        lines_perpendicular_when_collinear: lines_perpendicular,
        consistent: collinear == perpendicular && perpendicular == criterion,
        quadruple_lines,
    }
}

impl From<ExactError> for HirotakaError {
    fn from(e: ExactError) -> Self {
        HirotakaError::Geom(GeomError::Exact(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn pair(r1: i64, r2: i64, d: i64) -> CirclePair {
        make_pair(&ratio(r1, 1), &ratio(r2, 1), &ratio(d, 1)).unwrap()
    }

    #[test]
    fn rational_criterion_pair() {
        let p = pair(1, 7, 10);
        assert_eq!(p.external_radicand(), ratio(64, 1));
        assert_eq!(p.internal_radicand(), ratio(36, 1));
        for [a, b] in p.tangent_points() {
            assert!(a.x.is_rational() && a.y.is_rational() && b.x.is_rational() && b.y.is_rational());
        }
        assert!(collinearity_check(&p));
        assert!(perpendicularity_check(&p));
        assert!(parallel_chords_check(&p));
        let report = equivalence_check(&p);
        assert_eq!(report.lines_perpendicular_when_collinear, Some(true));
        assert!(report.consistent);
    }

    #[test]
    fn two_radicand_negative_pair() {
        let p = pair(1, 2, 10);
        assert_eq!(p.external_radicand(), ratio(99, 1));
        assert_eq!(p.internal_radicand(), ratio(91, 1));
        let report = equivalence_check(&p);
        assert!(!report.collinear_quadruples);
        assert!(!report.tangent_pairs_perpendicular);
        assert!(!report.criterion_d2_eq_2r2);
        assert_eq!(report.lines_perpendicular_when_collinear, None);
        assert!(report.consistent);
        assert!(parallel_chords_check(&p));
    }

    #[test]
    fn scaled_and_larger_solutions() {
        for (r1, r2, d) in [(7, 17, 26), (2, 14, 20), (1, 41, 58)] {
            let report = equivalence_check(&pair(r1, r2, d));
            assert!(report.collinear_quadruples && report.tangent_pairs_perpendicular);
            assert!(report.criterion_d2_eq_2r2 && report.consistent);
        }
    }

    #[test]
    fn irrational_distance_from_the_forward_figure() {
        let p = make_pair_squared(&ratio(1, 1), &ratio(2, 1), &ratio(10, 1)).unwrap();
        assert_eq!(p.d(), &"1*sqrt(10)".parse::<AlgNum>().unwrap());
        let report = equivalence_check(&p);
        assert!(report.collinear_quadruples && report.tangent_pairs_perpendicular && report.criterion_d2_eq_2r2);
        assert_eq!(report.lines_perpendicular_when_collinear, Some(true));
        assert!(parallel_chords_check(&p));
    }

    #[test]
    fn rejects_bad_pairs() {
        let r = |n| ratio(n, 1);
        assert_eq!(make_pair(&r(1), &r(2), &r(3)), Err(HirotakaError::NotSeparate));
        assert_eq!(make_pair(&r(1), &r(1), &r(2)), Err(HirotakaError::NotSeparate));
        assert_eq!(make_pair(&r(0), &r(2), &r(9)), Err(HirotakaError::NonpositiveInput));
        assert_eq!(make_pair(&r(1), &r(2), &r(-9)), Err(HirotakaError::NonpositiveInput));
        assert_eq!(make_pair_squared(&r(1), &r(2), &r(0)), Err(HirotakaError::NonpositiveInput));
    }

    #[test]
    fn three_radicands_are_reported() {
        // sqrt(11), sqrt(10 - 1) = 3 is fine, but d^2 = 11 gives sqrt(11), sqrt(10), sqrt(2)
        let err = make_pair_squared(&ratio(1, 1), &ratio(2, 1), &ratio(11, 1)).unwrap_err();
        assert_eq!(err.code(), "RADICAND_OVERFLOW");
    }

    #[test]
    fn criterion_values() {
        assert!(criterion_check(&ratio(1, 1), &ratio(7, 1), &ratio(10, 1)));
        assert!(criterion_check_squared(&ratio(1, 1), &ratio(2, 1), &ratio(10, 1)));
        assert!(!criterion_check(&ratio(1, 1), &ratio(2, 1), &ratio(10, 1)));
        // holds, but the pair is tangent and never reaches the checks
        assert!(criterion_check(&ratio(1, 1), &ratio(1, 1), &ratio(2, 1)));
    }
}
