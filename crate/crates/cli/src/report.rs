//! Verification reports: a named list of pass/fail checks with a
//! machine-readable payload.

use kn_core::Result;
use serde::Serialize;
use serde_json::Value;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// One-line human summary.
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub detail: Value,
    /// Wall clock; printed in text mode only so that JSON stays reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, summary: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            summary: summary.into(),
            counterexample: None,
            detail: Value::Null,
            elapsed: Duration::ZERO,
        }
    }

    pub fn detail(mut self, v: Value) -> Self {
        self.detail = v;
        self
    }

    pub fn counterexample(mut self, c: Option<String>) -> Self {
        self.counterexample = c;
        self
    }
}

/// Runs `f` and stamps its elapsed time (split evenly) on checks not already timed.
pub fn timed(f: impl FnOnce() -> Result<Vec<Check>>) -> Result<Vec<Check>> {
    let start = Instant::now();
    let mut checks = f()?;
    let per = start.elapsed() / checks.len().max(1) as u32;
    for c in checks.iter_mut().filter(|c| c.elapsed.is_zero()) {
        c.elapsed = per;
    }
    Ok(checks)
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub config: Value,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, config: Value, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        VerificationReport { suite: suite.into(), config, passed, checks }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.suite);
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let pad = width - c.name.chars().count();
            let _ = writeln!(
                out,
                "{mark}  {}{}  {}  [{:.2}s]",
                c.name,
                " ".repeat(pad),
                c.summary,
                c.elapsed.as_secs_f64()
            );
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "      counterexample: {ce}");
            }
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{ok}/{} checks passed", self.checks.len());
        out
    }
}
