//! Verdicts, counterexample records, and the JSON report emitted by the
//! verification suite.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

/// Outcome of checking one theorem instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    /// Hypotheses held and the conclusion held.
    Pass,
    /// A hypothesis failed, so the instance says nothing about the theorem.
    Skipped { reason: String },
    /// Hypotheses held but the conclusion failed.
    Fail { observed: String, expected: String },
}

impl Verdict {
    pub fn skipped(reason: impl Into<String>) -> Verdict {
        Verdict::Skipped {
            reason: reason.into(),
        }
    }

    pub fn fail(observed: impl Into<String>, expected: impl Into<String>) -> Verdict {
        Verdict::Fail {
            observed: observed.into(),
            expected: expected.into(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Verdict::Skipped { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }
}

/// A failed instance, with enough detail to replay it in isolation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub group: String,
    pub args: BTreeMap<String, String>,
    pub observed: String,
    pub expected: String,
    pub version: String,
    pub config_hash: String,
}

/// Per-check tallies. `tested` counts instances whose hypotheses held.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: String,
    pub tested: u64,
    pub passed: u64,
    pub skipped: u64,
    pub failed: u64,
}

impl CheckSummary {
    pub fn new(check: impl Into<String>) -> CheckSummary {
        CheckSummary {
            check: check.into(),
            ..CheckSummary::default()
        }
    }

    pub fn record(&mut self, verdict: &Verdict) {
        match verdict {
            Verdict::Pass => {
                self.tested += 1;
                self.passed += 1;
            }
            Verdict::Skipped { .. } => self.skipped += 1,
            Verdict::Fail { .. } => {
                self.tested += 1;
                self.failed += 1;
            }
        }
    }

    pub fn merge(&mut self, other: &CheckSummary) {
        self.tested += other.tested;
        self.passed += other.passed;
        self.skipped += other.skipped;
        self.failed += other.failed;
    }
}

/// The configuration a run was performed under, echoed into the report.
/// Worker count is deliberately absent: reports must not depend on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub max_order: u32,
    pub checks: Vec<String>,
    pub mode: String,
    pub sample_count: u64,
    pub seed: u64,
    pub symmetry_reduction: bool,
}

/// Stable hash of the echoed configuration, stamped on every counterexample.
pub fn config_hash(config: &ConfigEcho) -> String {
    let canonical = serde_json::to_string(config).expect("config serializes");
    let digest = Sha256::digest(canonical.as_bytes());
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: ConfigEcho,
    pub config_hash: String,
    /// Always serialized as 0 so reports are byte-stable; wall time goes to
    /// stderr instead.
    pub elapsed_ms: u64,
    pub checks: Vec<CheckSummary>,
    pub counterexamples: Vec<Counterexample>,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.failed > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check, same order as the JSON `checks` array.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,tested,passed,skipped,failed\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                c.check, c.tested, c.passed, c.skipped, c.failed
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_config() -> ConfigEcho {
        ConfigEcho {
            max_order: 10,
            checks: vec!["kneser".into(), "lee".into()],
            mode: "exhaustive".into(),
            sample_count: 200,
            seed: 42,
            symmetry_reduction: true,
        }
    }

    #[test]
    fn verdict_serializes_with_status_tag() {
        let pass = serde_json::to_value(Verdict::Pass).unwrap();
        assert_eq!(pass["status"], "pass");
        let skip = serde_json::to_value(Verdict::skipped("not separable")).unwrap();
        assert_eq!(skip["status"], "skipped");
        assert_eq!(skip["reason"], "not separable");
        let fail = serde_json::to_value(Verdict::fail("3", ">= 4")).unwrap();
        assert_eq!(fail["status"], "fail");
        assert_eq!(fail["observed"], "3");
        assert_eq!(fail["expected"], ">= 4");
    }

    #[test]
    fn summary_record_tallies() {
        let mut s = CheckSummary::new("kneser");
        s.record(&Verdict::Pass);
        s.record(&Verdict::Pass);
        s.record(&Verdict::skipped("periodic sum"));
        s.record(&Verdict::fail("1", "2"));
        assert_eq!((s.tested, s.passed, s.skipped, s.failed), (3, 2, 1, 1));
    }

    #[test]
    fn config_hash_is_stable_and_sensitive() {
        let a = config_hash(&sample_config());
        let b = config_hash(&sample_config());
        assert_eq!(a, b);
        assert_eq!(a.len(), 64);
        let mut other = sample_config();
        other.seed = 43;
        assert_ne!(a, config_hash(&other));
    }

    #[test]
    fn report_json_pins_elapsed_to_zero() {
        let config = sample_config();
        let hash = config_hash(&config);
        let report = Report {
            version: "0.1.0".into(),
            config,
            config_hash: hash,
            elapsed_ms: 0,
            checks: vec![CheckSummary::new("kneser")],
            counterexamples: vec![],
        };
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(value["elapsed_ms"], 0);
        assert!(value["config"].get("workers").is_none());
        assert_eq!(report.to_csv(), "check,tested,passed,skipped,failed\nkneser,0,0,0,0\n");
    }
}
