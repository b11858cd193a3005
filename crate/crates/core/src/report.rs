//! Suite reports: a text table for people, tab-separated records for diffing.

use std::fmt::Write as _;
use std::time::Duration;

use crate::rational::{fmt_q, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The item could not be decided within its budget.
    Budget,
    /// Bad input for this item.
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Budget => "budget",
            Verdict::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportItem {
    pub name: String,
    pub verdict: Verdict,
    /// Exact value, `p/q`, or empty.
    pub value: String,
    /// Certificate, witness or explanation.
    pub detail: String,
    pub elapsed: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunReport {
    pub suite: String,
    pub items: Vec<ReportItem>,
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

impl RunReport {
    pub fn new(suite: impl Into<String>) -> Self {
        RunReport { suite: suite.into(), items: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict, value: Option<Rational>, detail: impl Into<String>) {
        self.items.push(ReportItem {
            name: name.into(),
            verdict,
            value: value.map(|v| fmt_q(&v)).unwrap_or_default(),
            detail: detail.into(),
            elapsed: None,
        });
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        if let Some(last) = self.items.last_mut() {
            last.elapsed = Some(elapsed);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.verdict == Verdict::Pass)
    }

    pub fn has(&self, v: Verdict) -> bool {
        self.items.iter().any(|i| i.verdict == v)
    }

    /// `suite \t item \t verdict \t value \t detail`, one line per item.
    /// Timing is left out so identical inputs give identical bytes.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for i in &self.items {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                clean(&self.suite),
                clean(&i.name),
                i.verdict.as_str(),
                clean(&i.value),
                clean(&i.detail)
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.suite);
        let width = self.items.iter().map(|i| i.name.len()).max().unwrap_or(0);
        for i in &self.items {
            let _ = write!(out, "{:<6} {:<width$}", i.verdict.as_str(), i.name);
            if !i.value.is_empty() {
                let _ = write!(out, "  {}", i.value);
            }
            if !i.detail.is_empty() {
                let _ = write!(out, "  {}", i.detail);
            }
            if let Some(t) = i.elapsed {
                let _ = write!(out, "  ({:.2?})", t);
            }
            out.push('\n');
        }
        let failed = self.items.iter().filter(|i| i.verdict != Verdict::Pass).count();
        let _ = writeln!(out, "{} items, {} not passing", self.items.len(), failed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn records_are_tab_separated_and_clean() {
        let mut r = RunReport::new("s");
        r.push("a", Verdict::Pass, Some(q(-8, 1)), "x\ty");
        r = r.timed(Duration::from_millis(3));
        r.push("b", Verdict::Fail, None, "");
        assert_eq!(r.to_records(), "s\ta\tpass\t-8/1\tx y\ns\tb\tfail\t\t\n");
        assert!(!r.passed());
        assert!(r.to_text().contains("2 items, 1 not passing"));
    }
}
