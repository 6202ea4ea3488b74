//! Machine-readable reports.
//!
//! Schema: `{ "command", "inputs": {name: exact text}, "flags": {name: bool},
//! "witnesses": {name: {"exact", "approx"}}, "failures": [text], "version" }`.
//! Keys are sorted, so equal inputs serialize to equal bytes.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::exactnum::AlgNum;
use crate::geom::{Line, Point};

use super::forward::{ClaimReport, ForwardConfig};
use super::reverse::{CirclePair, EquivalenceReport};
use super::sweep::SweepSummary;

/// Version string written into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Significant digits of the `approx` fields.
pub const APPROX_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub exact: String,
    pub approx: String,
}

impl Witness {
    pub fn scalar(v: &AlgNum) -> Self {
        Witness { exact: v.to_string(), approx: v.to_decimal(APPROX_DIGITS) }
    }

    pub fn point(p: &Point) -> Self {
        Witness {
            exact: p.to_string(),
            approx: format!("({}, {})", p.x.to_decimal(APPROX_DIGITS), p.y.to_decimal(APPROX_DIGITS)),
        }
    }

    pub fn line(l: &Line) -> Self {
        let [a, b, c] = [l.a(), l.b(), l.c()].map(|v| v.to_decimal(APPROX_DIGITS));
        Witness { exact: l.to_string(), approx: format!("({a})*x + ({b})*y + ({c}) = 0") }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub flags: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Witness>,
    pub failures: Vec<String>,
    /// Extra top-level fields, e.g. sweep counts.
    pub extra: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Report::default() }
    }

    pub fn input(mut self, name: &str, value: impl ToString) -> Self {
        self.inputs.insert(name.to_string(), value.to_string());
        self
    }

    fn add_flags<'a>(&mut self, flags: impl IntoIterator<Item = (&'a str, bool)>) {
        for (name, v) in flags {
            self.flags.insert(name.to_string(), v);
            if !v {
                self.failures.push(name.to_string());
            }
        }
    }

    /// Every named point, line and both circles of a figure.
    pub fn with_config(mut self, cfg: &ForwardConfig) -> Self {
        for (name, p) in cfg.named_points() {
            self.witnesses.insert(format!("point_{name}"), Witness::point(p));
        }
        for (name, l) in cfg.named_lines() {
            self.witnesses.insert(format!("line_{name}"), Witness::line(l));
        }
        for (name, c) in [("c", cfg.circle_c()), ("c_prime", cfg.circle_c_prime())] {
            self.witnesses.insert(format!("circle_{name}_center"), Witness::point(c.center()));
            self.witnesses.insert(format!("circle_{name}_radius"), Witness::scalar(c.radius()));
        }
        self
    }

    pub fn with_claims(mut self, claims: &ClaimReport) -> Self {
        self.add_flags(claims.flags());
        self
    }

    /// Tangent lines and points of a pair, plus its equivalence flags.
    pub fn with_equivalence(mut self, pair: &CirclePair, report: &EquivalenceReport) -> Self {
        self.add_flags(report.flags());
        self.witnesses.insert("d".to_string(), Witness::scalar(pair.d()));
        let names = ["external_1", "external_2", "internal_1", "internal_2"];
        for (name, w) in names.iter().zip(pair.witnesses()) {
            self.witnesses.insert(format!("tangent_{name}"), Witness::line(w.line()));
            self.witnesses.insert(format!("tangent_{name}_point1"), Witness::point(w.point1()));
            self.witnesses.insert(format!("tangent_{name}_point2"), Witness::point(w.point2()));
        }
        if let Some((l1, l2)) = &report.quadruple_lines {
            self.witnesses.insert("quadruple_line_1".to_string(), Witness::line(l1));
            self.witnesses.insert("quadruple_line_2".to_string(), Witness::line(l2));
        }
        self
    }

    pub fn with_sweep(mut self, summary: &SweepSummary) -> Self {
        self.flags.insert("all_passed".to_string(), summary.failed == 0);
        self.extra.insert("passed".to_string(), json!(summary.passed));
        self.extra.insert("failed".to_string(), json!(summary.failed));
        if let Some(c) = &summary.first_counterexample {
            self.failures.push(c.clone());
        }
        self
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Map<String, Value> = self
            .witnesses
            .iter()
            .map(|(k, w)| (k.clone(), json!({ "exact": w.exact, "approx": w.approx })))
            .collect();
        let mut out = Map::new();
        out.insert("command".into(), json!(self.command));
        out.insert("inputs".into(), json!(self.inputs));
        out.insert("flags".into(), json!(self.flags));
        out.insert("witnesses".into(), Value::Object(witnesses));
        out.insert("failures".into(), json!(self.failures));
        out.insert("version".into(), json!(VERSION));
        for (k, v) in &self.extra {
            out.insert(k.clone(), v.clone());
        }
        Value::Object(out)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report is plain JSON")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use crate::hirotaka::{construct_forward, equivalence_check, make_pair, verify_forward};

    #[test]
    fn claim_report_json() {
        let cfg = construct_forward(&ratio(1, 1), &ratio(2, 1)).unwrap();
        let report = Report::new("verify")
            .input("r", cfg.r())
            .input("r_prime", cfg.r_prime())
            .with_config(&cfg)
            .with_claims(&verify_forward(&cfg));
        let v = report.to_json();
        assert_eq!(v["command"], "verify");
        assert_eq!(v["inputs"]["r_prime"], "2");
        assert_eq!(v["flags"].as_object().unwrap().len(), 10);
        assert_eq!(v["witnesses"]["point_I"]["exact"], "(-8/5, 9/5)");
        assert_eq!(v["witnesses"]["point_I"]["approx"], "(-1.60000000000, 1.80000000000)");
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
        assert_eq!(v["version"], VERSION);
    }

    #[test]
    fn equivalence_json_lists_failures() {
        let pair = make_pair(&ratio(1, 1), &ratio(2, 1), &ratio(10, 1)).unwrap();
        let report = Report::new("reverse").with_equivalence(&pair, &equivalence_check(&pair));
        let v = report.to_json();
        assert_eq!(v["flags"]["consistent"], true);
        assert_eq!(v["flags"]["collinear_quadruples"], false);
        assert!(v["witnesses"]["tangent_internal_1_point1"]["exact"].as_str().unwrap().contains("sqrt(91)"));
        assert_eq!(v["failures"].as_array().unwrap().len(), 3);
    }
}
