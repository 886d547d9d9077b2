//! The report written by every suite.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use tricox_core::certificates::Verdict;

/// One checked item of a suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepRecord {
    pub name: String,
    pub status: Verdict,
    pub record: Value,
}

impl StepRecord {
    pub fn new<T: Serialize>(name: impl Into<String>, status: Verdict, record: &T) -> Self {
        StepRecord { name: name.into(), status, record: serde_json::to_value(record).expect("reports serialise") }
    }
}

/// Result of running one suite. Self-contained: the config echo and step
/// records are enough to rerun and compare.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub status: Verdict,
    pub steps: Vec<StepRecord>,
    pub summary: Value,
    pub elapsed_ms: u64,
    pub version: String,
    pub config: Value,
}

impl Report {
    /// `status` is the suite-level verdict; it is lowered by any step that
    /// did not pass, so `verified` always means every step passed.
    pub fn new<C: Serialize>(suite: &str, status: Verdict, steps: Vec<StepRecord>, summary: Value, config: &C) -> Self {
        let status = steps.iter().fold(status, |acc, s| acc.and(s.status));
        Report {
            suite: suite.to_owned(),
            status,
            steps,
            summary,
            elapsed_ms: 0,
            version: env!("CARGO_PKG_VERSION").to_owned(),
            config: serde_json::to_value(config).expect("configs serialise"),
        }
    }

    pub fn with_elapsed(mut self, started: std::time::Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == Verdict::Verified
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<Report> {
        serde_json::from_str(line)
    }

    /// A short human summary: the verdict, failed or inconclusive steps, and
    /// the summary fields.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let passed = self.steps.iter().filter(|s| s.status == Verdict::Verified).count();
        let _ = writeln!(out, "{}: {} ({}/{} steps verified, {} ms)", self.suite, self.status, passed, self.steps.len(), self.elapsed_ms);
        for s in self.steps.iter().filter(|s| s.status != Verdict::Verified) {
            let detail = ["error", "detail"].iter().find_map(|k| s.record.get(*k).and_then(Value::as_str)).unwrap_or("");
            let _ = writeln!(out, "  {} {}: {}", s.status, s.name, detail);
        }
        if let Value::Object(map) = &self.summary {
            for (k, v) in map {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "  {k}: {shown}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_steps_lower_the_verdict() {
        let steps = vec![
            StepRecord::new("a", Verdict::Verified, &1),
            StepRecord::new("b", Verdict::Inconclusive, &2),
        ];
        let r = Report::new("demo", Verdict::Verified, steps, Value::Null, &());
        assert_eq!(r.status, Verdict::Inconclusive);
        assert_eq!(Report::from_json_line(&r.to_json_line()).unwrap(), r);
    }
}
