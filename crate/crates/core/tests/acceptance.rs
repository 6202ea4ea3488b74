//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, then a nonzero exit if any
//! criterion failed. Runs under `cargo test` with its own harness.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use sangaku::exactnum::{ratio, AlgNum, Rational};
use sangaku::geom::{classify_pair, common_tangents, Circle, Line, PairClass, Point};
use sangaku::hirotaka::sampling::{perturbed, separate_pair_sample};
use sangaku::hirotaka::{
    construct_forward, criterion_check, criterion_solutions, make_pair, parallel_chords_check,
    reverse_failure, sweep, Lcg64, SweepMode,
};
use sangaku::render::{render_forward, RenderOptions};

use common::{decimal_sign, element, field, nonzero_samples, rat, small_rational, vieta_oracle};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn r(p: i64, q: i64) -> Rational {
    ratio(p, q)
}

fn forward_fixture() -> Outcome {
    let (rr, rp) = (r(1, 1), r(2, 1));
    let cfg = construct_forward(&rr, &rp).map_err(|e| e.to_string())?;
    let p = cfg.points();

    // independent re-derivation from the defining points
    let (g, f, h) = ((r(-1, 1), r(1, 1)), (r(-1, 1), r(0, 1)), (r(0, 1), r(1, 1)));
    let (dd, c, e) = ((r(2, 1), r(2, 1)), (r(2, 1), r(0, 1)), (r(0, 1), r(2, 1)));
    let dir = |a: &(Rational, Rational), b: &(Rational, Rational)| (&b.0 - &a.0, &b.1 - &a.1);
    let oracle_j = vieta_oracle(e.clone(), dir(&e, &f), dd.clone(), &rp);
    let oracle_i = vieta_oracle(h.clone(), dir(&h, &c), g.clone(), &rr);
    let oracle_l = vieta_oracle(f.clone(), dir(&f, &e), g, &rr);
    let oracle_m = vieta_oracle(c.clone(), dir(&c, &h), dd, &rp);

    let expected = [
        ("I", (r(-8, 5), r(9, 5)), Some(oracle_i), &p.i),
        ("J", (r(4, 5), r(18, 5)), Some(oracle_j), &p.j),
        ("K", (r(-2, 5), r(6, 5)), None, &p.k),
        ("L", (r(-1, 5), r(8, 5)), Some(oracle_l), &p.l),
        ("M", (r(2, 5), r(4, 5)), Some(oracle_m), &p.m),
    ];
    for (name, fixture, oracle, got) in expected {
        if let Some(o) = oracle {
            ensure(o == fixture, || format!("oracle disagrees with fixture at {name}"))?;
        }
        ensure((rat(&got.x), rat(&got.y)) == fixture, || format!("{name} = {got}"))?;
    }
    // K solves EF: y = 2x + 2 and HC: y = 1 - x/2
    let (kx, ky) = (r(-2, 5), r(6, 5));
    ensure(&kx * r(2, 1) + r(2, 1) == ky && r(1, 1) - &kx * r(1, 2) == ky, || "K off a chord".into())?;

    let ij = Line::new(3, -4, 12).unwrap();
    let lm = Line::new(4, 3, -4).unwrap();
    ensure(cfg.lines().tangent_ij == ij, || format!("IJ = {}", cfg.lines().tangent_ij))?;
    ensure(cfg.lines().tangent_lm == lm, || format!("LM = {}", cfg.lines().tangent_lm))?;
    Ok("I, J, K, L, M and tangents IJ, LM exact".into())
}

fn forward_sweep() -> Outcome {
    let s = sweep(SweepMode::Forward, 2024, 200);
    ensure(s.failed == 0, || format!("{} failures, first: {:?}", s.failed, s.first_counterexample))?;
    Ok(format!("{}/{} samples, all ten claims true", s.passed, s.count))
}

fn reverse_positive() -> Outcome {
    let family = criterion_solutions(2024, 100);
    ensure(family.len() == 100, || "short family".into())?;
    for t in &family {
        ensure(criterion_check(&t.r1, &t.r2, &t.d), || format!("not on the curve: {t:?}"))?;
        if let Some(why) = reverse_failure(t, true) {
            return Err(why);
        }
    }
    Ok("100 criterion triples: collinear, perpendicular, criterion true, consistent".into())
}

fn reverse_negative() -> Outcome {
    let family = criterion_solutions(2024, 100);
    let mut unit_steps = 0;
    for t in &family {
        let off = perturbed(t);
        ensure(!criterion_check(&off.r1, &off.r2, &off.d), || format!("still on the curve: {off:?}"))?;
        if off.d == &t.d + r(1, 97) {
            unit_steps += 1;
        }
        if let Some(why) = reverse_failure(&off, false) {
            return Err(why);
        }
    }
    Ok(format!("100 perturbed triples ({unit_steps} by exactly 1/97): all flags false, consistent"))
}

fn parallel_chords() -> Outcome {
    let mut rng = Lcg64::new(2024);
    let mut equal = 0;
    for _ in 0..100 {
        let t = separate_pair_sample(&mut rng);
        if t.r1 == t.r2 {
            equal += 1;
        }
        let pair = make_pair(&t.r1, &t.r2, &t.d).map_err(|e| format!("{t:?}: {e}"))?;
        ensure(parallel_chords_check(&pair), || format!("chords not parallel: {t:?}"))?;
    }
    ensure(equal > 0, || "no equal-radius sample drawn".into())?;
    Ok(format!("100 separate pairs ({equal} with equal radii): external chords parallel"))
}

fn degenerate_handling() -> Outcome {
    let code = |res: Result<(), &'static str>| res.err().unwrap_or("OK");
    for x in [r(1, 1), r(7, 3)] {
        let got = code(construct_forward(&x, &x).map(|_| ()).map_err(|e| e.code()));
        ensure(got == "EQUAL_RADII_DEGENERATE", || format!("r = r' gave {got}"))?;
    }
    for (a, b, d) in [(1, 2, 3), (1, 2, 2), (1, 1, 1), (2, 3, 0)] {
        let got = code(make_pair(&r(a, 1), &r(b, 1), &r(d, 1)).map(|_| ()).map_err(|e| e.code()));
        let want = if d == 0 { "NONPOSITIVE_INPUT" } else { "NOT_SEPARATE" };
        ensure(got == want, || format!("({a}, {b}, {d}) gave {got}"))?;
    }
    let c1 = Circle::new(Point::origin(), 1).unwrap();
    let c2 = Circle::new(Point::origin(), 2).unwrap();
    let class = classify_pair(&c1, &c2).map_err(|e| e.to_string())?;
    ensure(class == PairClass::ConcentricOrEqual, || format!("concentric classified as {class}"))?;
    let got = code(common_tangents(&c1, &c2).map(|_| ()).map_err(|e| e.code()));
    ensure(got == "NOT_SEPARATE", || format!("tangent solver gave {got}"))?;
    Ok("EQUAL_RADII_DEGENERATE, NOT_SEPARATE and concentric rejection all named".into())
}

fn exactnum_certification() -> Outcome {
    let samples = nonzero_samples(2024, 1000);
    for x in &samples {
        let oracle = decimal_sign(x).ok_or_else(|| format!("oracle undecided on {x}"))?;
        ensure(x.sign() == oracle, || format!("sign({x}) = {} but oracle says {oracle}", x.sign()))?;
    }

    let mut rng = Lcg64::new(2025);
    let one = AlgNum::one();
    for i in 0..1000 {
        let f = field(&mut rng);
        let (x, y, z) = (element(&mut rng, f), element(&mut rng, f), element(&mut rng, f));
        let add = |a: &AlgNum, b: &AlgNum| a.checked_add(b).unwrap();
        let mul = |a: &AlgNum, b: &AlgNum| a.checked_mul(b).unwrap();
        ensure(add(&add(&x, &y), &z) == add(&x, &add(&y, &z)), || format!("#{i}: + not associative"))?;
        ensure(mul(&mul(&x, &y), &z) == mul(&x, &mul(&y, &z)), || format!("#{i}: * not associative"))?;
        ensure(add(&x, &y) == add(&y, &x) && mul(&x, &y) == mul(&y, &x), || format!("#{i}: not commutative"))?;
        ensure(mul(&x, &add(&y, &z)) == add(&mul(&x, &y), &mul(&x, &z)), || format!("#{i}: not distributive"))?;
        ensure(add(&x, &-x.clone()).is_zero() && mul(&x, &one) == x, || format!("#{i}: identities"))?;
        if !x.is_zero() {
            let inv = x.inverse().map_err(|e| e.to_string())?;
            ensure(mul(&x, &inv) == one, || format!("#{i}: x * inverse(x) != 1 for {x}"))?;
        }
    }

    for i in 0..200 {
        let q = small_rational(&mut rng, 500).abs();
        let s = AlgNum::sqrt_rational(&q).map_err(|e| e.to_string())?;
        ensure(s.square() == AlgNum::from(&q), || format!("#{i}: sqrt({q})^2 = {}", s.square()))?;
    }
    Ok("1000 signs match the 100-digit oracle; 1000 field-axiom samples; 200 square roots".into())
}

fn rendering() -> Outcome {
    let cfg = construct_forward(&r(1, 1), &r(2, 1)).map_err(|e| e.to_string())?;
    let opts = RenderOptions::default();
    let first = render_forward(&cfg, &opts);
    ensure(first == render_forward(&cfg, &opts), || "two runs differ".into())?;
    let golden = include_str!("golden/forward_1_2.svg");
    ensure(first == golden, || "output differs from the golden file".into())?;
    let doc = roxmltree::Document::parse(golden).map_err(|e| e.to_string())?;
    let count = |tag: &str| doc.descendants().filter(|n| n.has_tag_name(tag)).count();
    let (c, l, t) = (count("circle"), count("line"), count("text"));
    ensure((c, l, t) == (2, 6, 13), || format!("counted {c} circles, {l} lines, {t} labels"))?;
    Ok("byte-identical; golden file has 2 circles, 6 lines, 13 labels".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("forward_fixture", forward_fixture),
        ("forward_sweep", forward_sweep),
        ("reverse_positive_family", reverse_positive),
        ("reverse_negative_family", reverse_negative),
        ("general_parallel_chords", parallel_chords),
        ("degenerate_handling", degenerate_handling),
        ("exactnum_certification", exactnum_certification),
        ("rendering", rendering),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
