//! Named pass/fail checks rendered as text or JSON.

use std::fmt;

use serde::Serialize;

use crate::cone::CellMismatch;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<CellMismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            mismatch: None,
            detail: None,
        }
    }

    pub fn fail(name: &str, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed: false,
            mismatch: None,
            detail: Some(detail),
        }
    }

    pub fn outcome(name: &str, outcome: std::result::Result<(), String>) -> Self {
        match outcome {
            Ok(()) => Check::pass(name),
            Err(detail) => Check::fail(name, detail),
        }
    }

    pub fn cells(name: &str, m: Option<CellMismatch>) -> Self {
        Check {
            name: name.to_string(),
            passed: m.is_none(),
            detail: m
                .as_ref()
                .map(|m| format!("i={} e={}: expected {}, got {}", m.i, m.e, m.expected, m.actual)),
            mismatch: m,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for note in &self.notes {
            writeln!(f, "# {note}")?;
        }
        for c in &self.checks {
            match &c.detail {
                Some(d) => writeln!(f, "{} {}: {d}", if c.passed { "PASS" } else { "FAIL" }, c.name)?,
                None => writeln!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?,
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            writeln!(f, "all {} checks passed", self.checks.len())
        } else {
            writeln!(f, "{failed} of {} checks failed", self.checks.len())
        }
    }
}
