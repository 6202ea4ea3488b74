//! The forward figure: two circles tangent to both coordinate axes, one in the first
//! quadrant and one in the second.
//!
//! Frame: `A` at the origin, `AC` along the positive x-axis, `AE` along the positive y-axis.
//! `c` has center `G = (-r, r)` and touches the axes at `F = (-r, 0)` and `H = (0, r)`;
//! `c'` has center `D = (r', r')` and touches them at `C = (r', 0)` and `E = (0, r')`.
//! Every derived point is a second intersection computed by the root-sum identity, so the
//! whole figure has rational coordinates.

use crate::exactnum::{AlgNum, Rational};
use crate::geom::{
    collinear, homothety, is_parallel, is_perpendicular, is_tangent, line_intersection, on_circle,
    second_intersection, side_of, Circle, GeomResult, Line, Point,
};

use super::HirotakaError;

/// Named points of the figure. `x` is the external homothety center, where the two
/// external common tangents `AC` and `IJ` meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPoints {
    pub a: Point,
    pub c: Point,
    pub d: Point,
    pub e: Point,
    pub f: Point,
    pub g: Point,
    pub h: Point,
    pub i: Point,
    pub j: Point,
    pub k: Point,
    pub l: Point,
    pub m: Point,
    pub x: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedLines {
    pub axis_ac: Line,
    pub axis_ae: Line,
    pub line_ef: Line,
    pub line_hc: Line,
    pub tangent_ij: Line,
    pub tangent_lm: Line,
}

/// A fully built figure. Only [`construct_forward`] makes one, so every instance satisfies
/// the construction invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardConfig {
    r: Rational,
    r_prime: Rational,
    circle_c: Circle,
    circle_c_prime: Circle,
    points: NamedPoints,
    lines: NamedLines,
}

impl ForwardConfig {
    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn r_prime(&self) -> &Rational {
        &self.r_prime
    }

    /// Circle `c`, center `G`, radius `r`.
    pub fn circle_c(&self) -> &Circle {
        &self.circle_c
    }

    /// Circle `c'`, center `D`, radius `r'`.
    pub fn circle_c_prime(&self) -> &Circle {
        &self.circle_c_prime
    }

    pub fn points(&self) -> &NamedPoints {
        &self.points
    }

    pub fn lines(&self) -> &NamedLines {
        &self.lines
    }

    /// Points in label order `A, C, D, E, F, G, H, I, J, K, L, M, X`.
    pub fn named_points(&self) -> Vec<(&'static str, &Point)> {
        let p = &self.points;
        vec![
            ("A", &p.a),
            ("C", &p.c),
            ("D", &p.d),
            ("E", &p.e),
            ("F", &p.f),
            ("G", &p.g),
            ("H", &p.h),
            ("I", &p.i),
            ("J", &p.j),
            ("K", &p.k),
            ("L", &p.l),
            ("M", &p.m),
            ("X", &p.x),
        ]
    }

    pub fn named_lines(&self) -> Vec<(&'static str, &Line)> {
        let l = &self.lines;
        vec![
            ("AC", &l.axis_ac),
            ("AE", &l.axis_ae),
            ("EF", &l.line_ef),
            ("HC", &l.line_hc),
            ("IJ", &l.tangent_ij),
            ("LM", &l.tangent_lm),
        ]
    }

    /// Squared distance between the centers, `2 (r^2 + r'^2)`.
    pub fn center_distance_squared(&self) -> Rational {
        (self.r.square() + self.r_prime.square()) * Rational::from(2)
    }
}

/// Builds the figure for radii `r` (circle `c`) and `r'` (circle `c'`).
///
/// Equal radii put the circles in contact at `(0, r)`, which the figure excludes.
pub fn construct_forward(r: &Rational, r_prime: &Rational) -> Result<ForwardConfig, HirotakaError> {
    if r.signum() <= 0 || r_prime.signum() <= 0 {
        return Err(HirotakaError::NonpositiveRadius);
    }
    if r == r_prime {
        return Err(HirotakaError::EqualRadiiDegenerate);
    }
    Ok(build(r, r_prime)?)
}

fn build(r: &Rational, rp: &Rational) -> GeomResult<ForwardConfig> {
    let zero = Rational::zero();
    let pt = |x: &Rational, y: &Rational| Point::new(x.clone(), y.clone());
    let a = Point::origin();
    let c = pt(rp, &zero);
    let e = pt(&zero, rp);
    let f = pt(&-r, &zero);
    let h = pt(&zero, r);
    let g = pt(&-r, r);
    let d = pt(rp, rp);
    let circle_c = Circle::new(g.clone(), r.clone())?;
    let circle_c_prime = Circle::new(d.clone(), rp.clone())?;

    let axis_ac = Line::x_axis();
    let axis_ae = Line::y_axis();
    let line_ef = Line::through(&e, &f)?;
    let line_hc = Line::through(&h, &c)?;

    let j = second_intersection(&line_ef, &circle_c_prime, &e)?;
    let i = second_intersection(&line_hc, &circle_c, &h)?;
    let l = second_intersection(&line_ef, &circle_c, &f)?;
    let m = second_intersection(&line_hc, &circle_c_prime, &c)?;
    let k = line_intersection(&line_ef, &line_hc)?;

    let tangent_ij = Line::through(&i, &j)?;
    let tangent_lm = Line::through(&l, &m)?;
    let x = line_intersection(&axis_ac, &tangent_ij)?;

    Ok(ForwardConfig {
        r: r.clone(),
        r_prime: rp.clone(),
        circle_c,
        circle_c_prime,
        points: NamedPoints { a, c, d, e, f, g, h, i, j, k, l, m, x },
        lines: NamedLines { axis_ac, axis_ae, line_ef, line_hc, tangent_ij, tangent_lm },
    })
}

/// The ten claims about the figure, each decided by an exact predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimReport {
    pub parallel_if_jc: bool,
    pub perpendicular_ic_fj: bool,
    pub angle_at_k_right: bool,
    pub inscribed_angles_45: bool,
    pub ij_is_external_tangent: bool,
    pub lm_is_internal_tangent: bool,
    pub lm_perpendicular_ij: bool,
    pub quadruple_hcim_collinear: bool,
    pub quadruple_efjl_collinear: bool,
    pub quadruple_lines_perpendicular: bool,
}

impl ClaimReport {
    pub fn flags(&self) -> [(&'static str, bool); 10] {
        [
            ("parallel_IF_JC", self.parallel_if_jc),
            ("perpendicular_IC_FJ", self.perpendicular_ic_fj),
            ("angle_at_K_right", self.angle_at_k_right),
            ("inscribed_angles_45", self.inscribed_angles_45),
            ("ij_is_external_tangent", self.ij_is_external_tangent),
            ("lm_is_internal_tangent", self.lm_is_internal_tangent),
            ("lm_perpendicular_ij", self.lm_perpendicular_ij),
            ("quadruple_HCIM_collinear", self.quadruple_hcim_collinear),
            ("quadruple_EFJL_collinear", self.quadruple_efjl_collinear),
            ("quadruple_lines_perpendicular", self.quadruple_lines_perpendicular),
        ]
    }

    pub fn all_true(&self) -> bool {
        self.flags().iter().all(|(_, v)| *v)
    }
}

pub fn verify_forward(cfg: &ForwardConfig) -> ClaimReport {
    claims(cfg).expect("the figure has rational coordinates")
}

/// Angle between the rays `vertex -> p` and `vertex -> q` is exactly 45 degrees:
/// `dot = |cross| > 0`. A 135 degree angle is rejected.
fn forty_five(vertex: &Point, p: &Point, q: &Point) -> GeomResult<bool> {
    let u = p.sub(vertex)?;
    let v = q.sub(vertex)?;
    let dot = u.dot(&v)?;
    let cross = u.cross(&v)?;
    Ok(!dot.is_zero() && dot.square() == cross.square() && dot.sign() > 0)
}

fn tangent_to_both(line: &Line, cfg: &ForwardConfig, same_side: bool) -> GeomResult<bool> {
    if !is_tangent(line, &cfg.circle_c)? || !is_tangent(line, &cfg.circle_c_prime)? {
        return Ok(false);
    }
    let s = side_of(line, cfg.circle_c.center())? * side_of(line, cfg.circle_c_prime.center())?;
    Ok(if same_side { s > 0 } else { s < 0 })
}

fn claims(cfg: &ForwardConfig) -> GeomResult<ClaimReport> {
    let p = &cfg.points;
    let l = &cfg.lines;
    let all_collinear = |pts: [&Point; 4]| -> GeomResult<bool> {
        Ok(collinear(pts[0], pts[1], pts[2])? && collinear(pts[0], pts[1], pts[3])?)
    };
    let right_at_k = p.e.sub(&p.k)?.dot(&p.h.sub(&p.k)?)?.is_zero();

    Ok(ClaimReport {
        parallel_if_jc: is_parallel(&Line::through(&p.i, &p.f)?, &Line::through(&p.j, &p.c)?)?,
        perpendicular_ic_fj: is_perpendicular(&Line::through(&p.i, &p.c)?, &Line::through(&p.f, &p.j)?)?,
        angle_at_k_right: right_at_k,
        inscribed_angles_45: forty_five(&p.j, &p.k, &p.c)? && forty_five(&p.i, &p.c, &p.f)?,
        ij_is_external_tangent: on_circle(&p.i, &cfg.circle_c)?
            && on_circle(&p.j, &cfg.circle_c_prime)?
            && tangent_to_both(&l.tangent_ij, cfg, true)?,
        lm_is_internal_tangent: on_circle(&p.l, &cfg.circle_c)?
            && on_circle(&p.m, &cfg.circle_c_prime)?
            && tangent_to_both(&l.tangent_lm, cfg, false)?,
        lm_perpendicular_ij: is_perpendicular(&l.tangent_lm, &l.tangent_ij)?,
        quadruple_hcim_collinear: all_collinear([&p.h, &p.c, &p.i, &p.m])?,
        quadruple_efjl_collinear: all_collinear([&p.e, &p.f, &p.j, &p.l])?,
        quadruple_lines_perpendicular: is_perpendicular(&l.line_hc, &l.line_ef)?,
    })
}

/// With `X` the meeting point of the external tangents and ratio `r / r'`, the homothety
/// at `X` carries `J` to `I` and `C` to `F`, hence line `JC` onto the parallel line `IF`.
pub fn homothety_transport_check(cfg: &ForwardConfig) -> bool {
    let ratio = AlgNum::from(&cfg.r / &cfg.r_prime);
    let p = &cfg.points;
    let run = || -> GeomResult<bool> {
        Ok(homothety(&p.x, &ratio, &p.j)? == p.i && homothety(&p.x, &ratio, &p.c)? == p.f)
    };
    run().expect("the figure has rational coordinates")
}

/// Equal tangent segments from `A` (`|AE| = |AC|`, `|AF| = |AH|`) and the square `EDCA`.
pub fn tangent_length_check(cfg: &ForwardConfig) -> bool {
    let p = &cfg.points;
    let run = || -> GeomResult<bool> {
        let len2 = |u: &Point, v: &Point| -> GeomResult<AlgNum> { u.sub(v)?.norm_squared() };
        let equal_tangents = len2(&p.e, &p.a)? == len2(&p.c, &p.a)? && len2(&p.f, &p.a)? == len2(&p.h, &p.a)?;
        // walking A -> C -> D -> E -> A turns by +90 degrees with equal steps
        let ring = [&p.a, &p.c, &p.d, &p.e, &p.a];
        let edges: Vec<Point> = ring.windows(2).map(|w| w[1].sub(w[0])).collect::<GeomResult<_>>()?;
        let square = edges.windows(2).all(|w| w[1] == w[0].perp()) && !edges[0].norm_squared()?.is_zero();
        Ok(equal_tangents && square)
    };
    run().expect("the figure has rational coordinates")
}
