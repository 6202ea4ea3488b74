mod common;

use proptest::prelude::*;
use sangaku::exactnum::{ratio, AlgNum, Rational};
use sangaku::geom::{reflect, Line, Point};
use sangaku::hirotaka::sampling::{perturbed, separate_pair_sample};
use sangaku::hirotaka::{
    construct_forward, criterion_check, criterion_check_squared, criterion_solutions, equivalence_check,
    homothety_transport_check, make_pair, make_pair_squared, parallel_chords_check, tangent_length_check,
    verify_forward, Lcg64, Triple,
};

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=1000, 1i64..=1000).prop_map(|(p, q)| ratio(p, q))
}

fn distinct_radii() -> impl Strategy<Value = (Rational, Rational)> {
    (positive(), positive()).prop_filter("r != r'", |(a, b)| a != b)
}

/// Tangent points of circles `(0,0), r1` and `(d,0), r2` from the textbook angle formulas,
/// in floating point: external pairs then internal pairs.
fn float_tangent_points(r1: f64, r2: f64, d: f64) -> [(f64, f64); 8] {
    let ce = (r1 - r2) / d;
    let se = (1.0 - ce * ce).sqrt();
    let ci = (r1 + r2) / d;
    let si = (1.0 - ci * ci).sqrt();
    [
        (r1 * ce, r1 * se),
        (d + r2 * ce, r2 * se),
        (r1 * ce, -r1 * se),
        (d + r2 * ce, -r2 * se),
        (r1 * ci, r1 * si),
        (d - r2 * ci, -r2 * si),
        (r1 * ci, -r1 * si),
        (d - r2 * ci, r2 * si),
    ]
}

fn float_collinear(pts: &[(f64, f64)]) -> bool {
    let (a, b) = (pts[0], pts[1]);
    let (ux, uy) = (b.0 - a.0, b.1 - a.1);
    let len = (ux * ux + uy * uy).sqrt();
    pts[2..].iter().all(|c| {
        let (vx, vy) = (c.0 - a.0, c.1 - a.1);
        let vlen = (vx * vx + vy * vy).sqrt().max(1e-300);
        ((ux * vy - uy * vx) / (len * vlen)).abs() < 1e-7
    })
}

/// Brute force over all 35 ways to split eight points into two fours.
fn float_splits_into_two_lines(pts: &[(f64, f64); 8]) -> bool {
    (0u32..256).filter(|m| m.count_ones() == 4 && m & 1 == 1).any(|m| {
        let (a, b): (Vec<_>, Vec<_>) = (0..8).partition(|i| m >> i & 1 == 1);
        let pick = |ix: &[usize]| ix.iter().map(|&i| pts[i]).collect::<Vec<_>>();
        float_collinear(&pick(&a)) && float_collinear(&pick(&b))
    })
}

fn to_f64(q: &Rational) -> f64 {
    AlgNum::from(q).to_f64()
}

fn mirror_y(p: &Point) -> Point {
    reflect(p, &Line::y_axis()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn forward_claims_hold((r, rp) in distinct_radii()) {
        let cfg = construct_forward(&r, &rp).unwrap();
        let report = verify_forward(&cfg);
        prop_assert!(report.all_true(), "{:?}", report);
        prop_assert!(homothety_transport_check(&cfg));
        prop_assert!(tangent_length_check(&cfg));
    }

    #[test]
    fn forward_figure_scales((r, rp) in distinct_radii(), k in positive()) {
        let base = construct_forward(&r, &rp).unwrap();
        let big = construct_forward(&(&r * &k), &(&rp * &k)).unwrap();
        let kk = AlgNum::from(&k);
        for ((name, p), (_, q)) in base.named_points().into_iter().zip(big.named_points()) {
            prop_assert_eq!(&p.scale(&kk).unwrap(), q, "point {}", name);
        }
        prop_assert_eq!(base.lines().tangent_ij.normal(), big.lines().tangent_ij.normal());
    }

    #[test]
    fn swapping_radii_mirrors_the_figure((r, rp) in distinct_radii()) {
        let cfg = construct_forward(&r, &rp).unwrap();
        let swapped = construct_forward(&rp, &r).unwrap();
        let (p, s) = (cfg.points(), swapped.points());
        // mirror image relabels G<->D, F<->C, H<->E, I<->J, L<->M and fixes A, K, X
        let pairs = [
            (&s.a, &p.a), (&s.g, &p.d), (&s.d, &p.g), (&s.f, &p.c), (&s.c, &p.f), (&s.h, &p.e),
            (&s.e, &p.h), (&s.i, &p.j), (&s.j, &p.i), (&s.l, &p.m), (&s.m, &p.l), (&s.k, &p.k), (&s.x, &p.x),
        ];
        for (from, to) in pairs {
            prop_assert_eq!(&mirror_y(from), to);
        }
    }

    #[test]
    fn criterion_with_irrational_distance((r1, r2) in distinct_radii()) {
        let d2 = (r1.square() + r2.square()) * Rational::from(2);
        prop_assert!(criterion_check_squared(&r1, &r2, &d2));
        let pair = make_pair_squared(&r1, &r2, &d2).unwrap();
        let report = equivalence_check(&pair);
        prop_assert!(report.consistent && report.collinear_quadruples, "{:?}", report);
        prop_assert_eq!(report.lines_perpendicular_when_collinear, Some(true));
    }

    #[test]
    fn criterion_is_scale_invariant((r1, r2) in distinct_radii(), gap in positive(), k in positive()) {
        let t = Triple::new(r1.clone(), r2.clone(), &r1 + &r2 + gap);
        let u = t.scaled(&k);
        prop_assert_eq!(criterion_check(&t.r1, &t.r2, &t.d), criterion_check(&u.r1, &u.r2, &u.d));
    }
}

#[test]
fn numeric_brute_force_agrees_with_the_criterion() {
    let mut samples: Vec<(Triple, bool)> = Vec::new();
    for t in criterion_solutions(11, 40) {
        samples.push((perturbed(&t), false));
        samples.push((t, true));
    }
    let mut rng = Lcg64::new(11);
    while samples.len() < 200 {
        let t = separate_pair_sample(&mut rng);
        let (r1, r2, d) = (to_f64(&t.r1), to_f64(&t.r2), to_f64(&t.d));
        // stay clear of the curve, where floats cannot decide
        if (d * d - 2.0 * (r1 * r1 + r2 * r2)).abs() > 1e-3 * d * d {
            samples.push((t, false));
        }
    }
    for (t, on_curve) in samples {
        let exact = criterion_check(&t.r1, &t.r2, &t.d);
        assert_eq!(exact, on_curve, "{t:?}");
        let pts = float_tangent_points(to_f64(&t.r1), to_f64(&t.r2), to_f64(&t.d));
        // perturbed pairs sit within 1/97 of the curve; floats only judge pairs clearly off it
        if on_curve || (to_f64(&t.d) - 2f64.sqrt() * to_f64(&t.r1).hypot(to_f64(&t.r2))).abs() > 0.05 {
            assert_eq!(float_splits_into_two_lines(&pts), exact, "float oracle on {t:?}");
        }
        let report = equivalence_check(&make_pair(&t.r1, &t.r2, &t.d).unwrap());
        assert!(report.consistent);
        assert_eq!(report.collinear_quadruples, exact, "{t:?}");
    }
}

#[test]
fn float_oracle_sees_the_worked_examples() {
    assert!(float_splits_into_two_lines(&float_tangent_points(1.0, 7.0, 10.0)));
    assert!(!float_splits_into_two_lines(&float_tangent_points(1.0, 2.0, 10.0)));
    assert!(float_splits_into_two_lines(&float_tangent_points(1.0, 2.0, 10f64.sqrt())));
}

#[test]
fn external_chords_parallel_for_every_kind_of_pair() {
    let mut rng = Lcg64::new(5);
    for _ in 0..60 {
        let t = separate_pair_sample(&mut rng);
        assert!(parallel_chords_check(&make_pair(&t.r1, &t.r2, &t.d).unwrap()), "{t:?}");
    }
}
