use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::forward::{construct_forward, verify_forward};
use super::reverse::{equivalence_check, make_pair};
use super::sampling::{criterion_solutions, forward_sample, perturbed, Lcg64, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Forward,
    Reverse,
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMode::Forward => "forward",
            SweepMode::Reverse => "reverse",
        })
    }
}

impl FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "forward" => Ok(SweepMode::Forward),
            "reverse" => Ok(SweepMode::Reverse),
            other => Err(format!("unknown sweep mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub mode: SweepMode,
    pub seed: u64,
    pub count: usize,
    pub passed: usize,
    pub failed: usize,
    /// Description of the lowest-index failing sample.
    pub first_counterexample: Option<String>,
}

/// Runs `count` samples. Forward: random `(r, r')`, all ten claims must hold. Reverse:
/// even indices take criterion triples (everything true), odd indices take the same family
/// pushed off the curve by `d += k/97` (everything false); every report must be consistent.
pub fn sweep(mode: SweepMode, seed: u64, count: usize) -> SweepSummary {
    let failures: Vec<Option<String>> = match mode {
        SweepMode::Forward => {
            let mut rng = Lcg64::new(seed);
            let samples: Vec<_> = (0..count).map(|_| forward_sample(&mut rng)).collect();
            samples
                .par_iter()
                .map(|(r, rp)| {
                    let describe = |why: String| Some(format!("r={r} r_prime={rp}: {why}"));
                    match construct_forward(r, rp) {
                        Err(e) => describe(e.to_string()),
                        Ok(cfg) => {
                            let report = verify_forward(&cfg);
                            let bad: Vec<&str> =
                                report.flags().iter().filter(|(_, v)| !v).map(|(k, _)| *k).collect();
                            if bad.is_empty() {
                                None
                            } else {
                                describe(format!("false flags {}", bad.join(",")))
                            }
                        }
                    }
                })
                .collect()
        }
        SweepMode::Reverse => {
            let positives = criterion_solutions(seed, count.div_ceil(2));
            let samples: Vec<(Triple, bool)> = (0..count)
                .map(|i| {
                    let base = &positives[i / 2];
                    if i % 2 == 0 {
                        (base.clone(), true)
                    } else {
                        (perturbed(base), false)
                    }
                })
                .collect();
            samples.par_iter().map(|(t, expect)| reverse_failure(t, *expect)).collect()
        }
    };
    let first_counterexample = failures.iter().flatten().next().cloned();
    let failed = failures.iter().filter(|f| f.is_some()).count();
    SweepSummary { mode, seed, count, passed: count - failed, failed, first_counterexample }
}

/// `None` when the pair's report is consistent and its flags equal `expect`.
pub fn reverse_failure(t: &Triple, expect: bool) -> Option<String> {
    let describe = |why: String| Some(format!("r1={} r2={} d={}: {why}", t.r1, t.r2, t.d));
    let pair = match make_pair(&t.r1, &t.r2, &t.d) {
        Ok(p) => p,
        Err(e) => return describe(e.to_string()),
    };
    let report = equivalence_check(&pair);
    if !report.consistent {
        return describe(format!("inconsistent report {report:?}"));
    }
    if report.collinear_quadruples != expect {
        return describe(format!("expected all flags {expect}"));
    }
    if expect && report.lines_perpendicular_when_collinear != Some(true) {
        return describe("quadruple lines not perpendicular".to_string());
    }
    None
}
