//! Structured check reports.
//!
//! Every verification entry point returns a [`Report`]: one [`Check`] per
//! identity, carrying the first counterexample (a basis tuple and the exact
//! LHS−RHS residual vector) plus a total violation count. Checks never stop
//! at the first failure; the count is over all basis tuples examined.

use crate::scalar::{fmt_rat, Rat};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    /// Basis indices of the first failing tuple, 0-based.
    pub tuple: Vec<usize>,
    /// LHS − RHS at that tuple.
    pub residual: Vec<Rat>,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub violations: u64,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            violations: 0,
            counterexample: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Accumulates violations for a single named identity.
#[derive(Debug)]
pub struct CheckBuilder {
    name: String,
    violations: u64,
    first: Option<Counterexample>,
    note: Option<String>,
}

impl CheckBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CheckBuilder {
            name: name.into(),
            violations: 0,
            first: None,
            note: None,
        }
    }

    /// Records `residual` at `tuple` if it is nonzero.
    pub fn observe(&mut self, tuple: &[usize], residual: &[Rat]) {
        if residual.iter().all(Zero::is_zero) {
            return;
        }
        self.violations += 1;
        if self.first.is_none() {
            self.first = Some(Counterexample {
                tuple: tuple.to_vec(),
                residual: residual.to_vec(),
            });
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn finish(self) -> Check {
        Check {
            passed: self.violations == 0,
            name: self.name,
            violations: self.violations,
            counterexample: self.first,
            note: self.note,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per check, human readable.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}", c.name));
            if !c.passed {
                out.push_str(&format!(" violations={}", c.violations));
                if let Some(ce) = &c.counterexample {
                    let res: Vec<String> = ce.residual.iter().map(fmt_rat).collect();
                    out.push_str(&format!(
                        " first_tuple={:?} residual=[{}]",
                        ce.tuple,
                        res.join(", ")
                    ));
                }
            }
            if let Some(n) = &c.note {
                out.push_str(&format!(" ({n})"));
            }
            out.push('\n');
        }
        out
    }
}
