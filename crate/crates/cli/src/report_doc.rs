//! Machine-readable report documents mirroring the library's check reports,
//! with a human-readable text rendering. Exit status 0 means every requested
//! check passed.

use lie_yamaguti::report::Report;
use lie_yamaguti::scalar::fmt_rat;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub status: String,
    pub checks: Vec<CheckDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tables: Vec<CohomologyRow>,
    /// Extension coefficient emitted by the obstruction command when the
    /// solve succeeds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    /// 1-based basis indices of the first failing tuple.
    pub tuple: Vec<usize>,
    pub residual: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CohomologyRow {
    pub level: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
}

impl ReportDocument {
    pub fn from_report(command: &str, report: &Report) -> Self {
        let checks = report
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.clone(),
                passed: c.passed,
                violations: c.violations,
                counterexample: c.counterexample.as_ref().map(|ce| CounterexampleDoc {
                    tuple: ce.tuple.iter().map(|i| i + 1).collect(),
                    residual: ce.residual.iter().map(fmt_rat).collect(),
                }),
                note: c.note.clone(),
            })
            .collect();
        ReportDocument {
            command: command.to_string(),
            status: if report.passed() { "pass" } else { "fail" }.into(),
            checks,
            tables: Vec::new(),
            extension: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.status.to_uppercase());
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {status} {}", c.name));
            if !c.passed {
                out.push_str(&format!(" violations={}", c.violations));
                if let Some(ce) = &c.counterexample {
                    out.push_str(&format!(
                        " first_tuple={:?} residual=[{}]",
                        ce.tuple,
                        ce.residual.join(", ")
                    ));
                }
            }
            if let Some(n) = &c.note {
                out.push_str(&format!(" ({n})"));
            }
            out.push('\n');
        }
        if !self.tables.is_empty() {
            out.push_str("  level  dim C  dim Z  dim B  dim H\n");
            for row in &self.tables {
                out.push_str(&format!(
                    "  {:>5}  {:>5}  {:>5}  {:>5}  {:>5}\n",
                    row.level,
                    row.dim_cochains,
                    row.dim_cocycles,
                    row.dim_coboundaries,
                    row.dim_cohomology
                ));
            }
        }
        if let Some(ext) = &self.extension {
            out.push_str("  extension coefficient:\n");
            for row in ext {
                out.push_str(&format!("    [{}]\n", row.join(", ")));
            }
        }
        out
    }
}
