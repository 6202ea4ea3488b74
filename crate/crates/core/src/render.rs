//! Deterministic SVG figures.
//!
//! Geometry stays exact until the last step: the view box, line clipping and label offsets
//! are computed in the figure's number field, and each coordinate is converted once with
//! [`AlgNum::to_decimal`]. The document uses world units with `y` negated, so the figure is
//! upright and every emitted number is a rounded exact value.

use std::cmp::Ordering;
use std::fmt::Write as _;

use thiserror::Error;

use crate::exactnum::{ratio, AlgNum, Rational};
use crate::geom::{Circle, GeomResult, Line, Point};
use crate::hirotaka::{collinear_quadruples, CirclePair, ForwardConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("invalid render options: {0}")]
    InvalidOptions(String),
}

impl RenderError {
    pub fn code(&self) -> &'static str {
        match self {
            RenderError::InvalidOptions(_) => "INVALID_RENDER_OPTIONS",
        }
    }
}

/// Validated drawing options. Pixel quantities are relative to `canvas_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    canvas_size: u32,
    margin: Rational,
    decimal_digits: usize,
    show_labels: bool,
    stroke_width: Rational,
}

impl RenderOptions {
    pub fn new(
        canvas_size: u32,
        margin: Rational,
        decimal_digits: usize,
        show_labels: bool,
        stroke_width: Rational,
    ) -> Result<Self, RenderError> {
        let bad = |why: &str| Err(RenderError::InvalidOptions(why.to_string()));
        if canvas_size == 0 {
            return bad("canvas_size must be positive");
        }
        if margin.signum() < 0 || margin >= ratio(1, 2) {
            return bad("margin must lie in [0, 1/2)");
        }
        if decimal_digits < 3 {
            return bad("decimal_digits must be at least 3");
        }
        if stroke_width.signum() <= 0 {
            return bad("stroke_width must be positive");
        }
        Ok(RenderOptions { canvas_size, margin, decimal_digits, show_labels, stroke_width })
    }

    pub fn canvas_size(&self) -> u32 {
        self.canvas_size
    }

    pub fn margin(&self) -> &Rational {
        &self.margin
    }

    pub fn decimal_digits(&self) -> usize {
        self.decimal_digits
    }

    pub fn show_labels(&self) -> bool {
        self.show_labels
    }

    pub fn stroke_width(&self) -> &Rational {
        &self.stroke_width
    }

    pub fn with_labels(mut self, show: bool) -> Self {
        self.show_labels = show;
        self
    }
}

impl Default for RenderOptions {
    /// 800 px canvas, 1/10 margin, 6 significant digits, labels on, 2 px strokes.
    fn default() -> Self {
        RenderOptions::new(800, ratio(1, 10), 6, true, ratio(2, 1)).expect("defaults are valid")
    }
}

/// Figure with both circles, the four tangents `AC, AE, IJ, LM`, the chords `EF, HC`
/// and the thirteen named points.
pub fn render_forward(cfg: &ForwardConfig, opts: &RenderOptions) -> String {
    let lines: Vec<(String, &Line)> =
        cfg.named_lines().into_iter().map(|(name, l)| (format!("line-{name}"), l)).collect();
    let points: Vec<(String, &Point)> =
        cfg.named_points().into_iter().map(|(name, p)| (name.to_string(), p)).collect();
    let figure = Figure {
        circles: [("circle-c", cfg.circle_c()), ("circle-c-prime", cfg.circle_c_prime())],
        lines,
        points,
    };
    figure.draw(opts).expect("forward figures have rational coordinates")
}

/// Figure with both circles, the four common tangents and their eight tangent points
/// `T1..T8`, plus the two quadruple lines when the tangent points are collinear in fours.
pub fn render_pair(pair: &CirclePair, opts: &RenderOptions) -> String {
    let names = ["tangent-external-1", "tangent-external-2", "tangent-internal-1", "tangent-internal-2"];
    let quadruple = collinear_quadruples(pair);
    let mut lines: Vec<(String, &Line)> =
        names.iter().zip(pair.witnesses()).map(|(n, w)| (n.to_string(), w.line())).collect();
    if let Some((l1, l2)) = &quadruple {
        lines.push(("quadruple-1".to_string(), l1));
        lines.push(("quadruple-2".to_string(), l2));
    }
    let points: Vec<(String, &Point)> = pair
        .tangent_points()
        .into_iter()
        .flatten()
        .enumerate()
        .map(|(i, p)| (format!("T{}", i + 1), p))
        .collect();
    let figure = Figure { circles: [("circle-1", pair.circle1()), ("circle-2", pair.circle2())], lines, points };
    figure.draw(opts).expect("pair coordinates share one number field")
}

struct Figure<'a> {
    circles: [(&'static str, &'a Circle); 2],
    lines: Vec<(String, &'a Line)>,
    points: Vec<(String, &'a Point)>,
}

/// Square window `[x0, x0 + side] x [y0, y0 + side]` in world units.
struct ViewBox {
    x0: AlgNum,
    y0: AlgNum,
    side: AlgNum,
}

impl ViewBox {
    fn x1(&self) -> GeomResult<AlgNum> {
        Ok(self.x0.checked_add(&self.side)?)
    }

    fn y1(&self) -> GeomResult<AlgNum> {
        Ok(self.y0.checked_add(&self.side)?)
    }

    fn contains(&self, p: &Point) -> GeomResult<bool> {
        let inside = |v: &AlgNum, lo: &AlgNum, hi: &AlgNum| -> GeomResult<bool> {
            Ok(v.cmp_exact(lo)? != Ordering::Less && v.cmp_exact(hi)? != Ordering::Greater)
        };
        Ok(inside(&p.x, &self.x0, &self.x1()?)? && inside(&p.y, &self.y0, &self.y1()?)?)
    }

    /// The part of `l` inside the window, or `None` when it misses the interior.
    fn clip(&self, l: &Line) -> GeomResult<Option<(Point, Point)>> {
        let mut hits: Vec<Point> = Vec::new();
        for x in [self.x0.clone(), self.x1()?] {
            if !l.b().is_zero() {
                let y = -l.a().checked_mul(&x)?.checked_add(l.c())?.checked_div(l.b())?;
                hits.push(Point { x, y });
            }
        }
        for y in [self.y0.clone(), self.y1()?] {
            if !l.a().is_zero() {
                let x = -l.b().checked_mul(&y)?.checked_add(l.c())?.checked_div(l.a())?;
                hits.push(Point { x, y });
            }
        }
        let mut inside = Vec::new();
        for p in hits {
            if self.contains(&p)? {
                inside.push(p);
            }
        }
        // hits are collinear, so the lexicographic extremes are the segment ends
        let mut lo: Option<Point> = None;
        let mut hi: Option<Point> = None;
        for p in inside {
            if lo.as_ref().map_or(Ok(true), |q| p.cmp_lex(q).map(|o| o == Ordering::Less))? {
                lo = Some(p.clone());
            }
            if hi.as_ref().map_or(Ok(true), |q| p.cmp_lex(q).map(|o| o == Ordering::Greater))? {
                hi = Some(p);
            }
        }
        Ok(match (lo, hi) {
            (Some(a), Some(b)) if a != b => Some((a, b)),
            _ => None,
        })
    }
}

fn exact_min(values: &[AlgNum]) -> GeomResult<AlgNum> {
    let mut best = values[0].clone();
    for v in &values[1..] {
        if v.cmp_exact(&best)? == Ordering::Less {
            best = v.clone();
        }
    }
    Ok(best)
}

fn exact_max(values: &[AlgNum]) -> GeomResult<AlgNum> {
    let negated: Vec<AlgNum> = values.iter().map(|v| -v.clone()).collect();
    Ok(-exact_min(&negated)?)
}

impl Figure<'_> {
    fn view_box(&self, opts: &RenderOptions) -> GeomResult<ViewBox> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (_, c) in &self.circles {
            let (p, r) = (c.center(), c.radius());
            xs.push(p.x.checked_sub(r)?);
            xs.push(p.x.checked_add(r)?);
            ys.push(p.y.checked_sub(r)?);
            ys.push(p.y.checked_add(r)?);
        }
        for (_, p) in &self.points {
            xs.push(p.x.clone());
            ys.push(p.y.clone());
        }
        let (xmin, xmax) = (exact_min(&xs)?, exact_max(&xs)?);
        let (ymin, ymax) = (exact_min(&ys)?, exact_max(&ys)?);
        let w = xmax.checked_sub(&xmin)?;
        let h = ymax.checked_sub(&ymin)?;
        let content = exact_max(&[w, h])?;
        // content fills the fraction 1 - 2 margin of the window
        let fill = Rational::one() - opts.margin.clone() * Rational::from(2);
        let side = content.scale(&fill.recip()?);
        let half = ratio(1, 2);
        let x0 = xmin.checked_add(&xmax)?.checked_sub(&side)?.scale(&half);
        let y0 = ymin.checked_add(&ymax)?.checked_sub(&side)?.scale(&half);
        Ok(ViewBox { x0, y0, side })
    }

    fn draw(&self, opts: &RenderOptions) -> GeomResult<String> {
        let vb = self.view_box(opts)?;
        let digits = opts.decimal_digits;
        let num = |v: &AlgNum| v.to_decimal(digits);
        let sx = |v: &AlgNum| num(v);
        let sy = |v: &AlgNum| num(&-v.clone());
        // world units per pixel
        let px = |k: Rational| vb.side.scale(&(k / Rational::from(i64::from(opts.canvas_size))));

        let mut out = String::new();
        let canvas = opts.canvas_size;
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{canvas}\" height=\"{canvas}\" \
             viewBox=\"{} {} {} {}\">",
            sx(&vb.x0),
            sy(&vb.y1()?),
            num(&vb.side),
            num(&vb.side)
        );
        let stroke = num(&px(opts.stroke_width.clone()));
        let _ = writeln!(out, "  <g id=\"circles\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\">");
        for (id, c) in &self.circles {
            let p = c.center();
            let _ = writeln!(
                out,
                "    <circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                sx(&p.x),
                sy(&p.y),
                num(c.radius())
            );
        }
        out.push_str("  </g>\n");

        let _ = writeln!(out, "  <g id=\"lines\" stroke=\"#1f4e9c\" stroke-width=\"{stroke}\">");
        for (id, l) in &self.lines {
            if let Some((a, b)) = vb.clip(l)? {
                let _ = writeln!(
                    out,
                    "    <line id=\"{id}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    sx(&a.x),
                    sy(&a.y),
                    sx(&b.x),
                    sy(&b.y)
                );
            }
        }
        out.push_str("  </g>\n");

        // zero-length paths with round caps draw dots without adding circle elements
        let marker = num(&px(opts.stroke_width.clone() * Rational::from(3)));
        let _ = writeln!(
            out,
            "  <g id=\"points\" stroke=\"#b22222\" stroke-linecap=\"round\" stroke-width=\"{marker}\">"
        );
        for (name, p) in &self.points {
            let _ = writeln!(out, "    <path id=\"pt-{name}\" d=\"M {} {} h 0\"/>", sx(&p.x), sy(&p.y));
        }
        out.push_str("  </g>\n");

        if opts.show_labels {
            let font = num(&px(Rational::from(14)));
            let _ = writeln!(
                out,
                "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"{font}\" text-anchor=\"middle\" \
                 dominant-baseline=\"central\">"
            );
            let gap = px(Rational::from(12));
            for (name, p) in &self.points {
                let at = self.label_position(p, &gap)?;
                let _ = writeln!(out, "    <text x=\"{}\" y=\"{}\">{name}</text>", sx(&at.x), sy(&at.y));
            }
            out.push_str("  </g>\n");
        }
        out.push_str("</svg>\n");
        Ok(out)
    }

    /// `p` pushed by `gap` (in the max norm) away from the nearer circle center.
    fn label_position(&self, p: &Point, gap: &AlgNum) -> GeomResult<Point> {
        let [(_, c1), (_, c2)] = &self.circles;
        let d1 = p.sub(c1.center())?.norm_squared()?;
        let d2 = p.sub(c2.center())?.norm_squared()?;
        let center = if d2.cmp_exact(&d1)? == Ordering::Less { c2.center() } else { c1.center() };
        let mut u = p.sub(center)?;
        if u.x.is_zero() && u.y.is_zero() {
            u = Point::new(1, 1);
        }
        let len = exact_max(&[u.x.abs(), u.y.abs()])?;
        let k = gap.checked_div(&len)?;
        p.add(&u.scale(&k)?)
    }
}
