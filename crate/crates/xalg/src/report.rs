//! Deterministic verification reports.
//!
//! Reports are assembled in a fixed order and serialize byte-identically
//! across runs. Wall-clock timing is opt-in and excluded from serialization
//! by default so that golden comparisons stay stable.

use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObjectSummary {
    pub name: String,
    pub kind: String,
    pub dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub verdicts: Vec<Verdict>,
    pub objects: Vec<ObjectSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            verdicts: Vec::new(),
            objects: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, details: Option<String>) {
        self.verdicts.push(Verdict {
            check: name.into(),
            passed,
            details,
        });
    }

    pub fn object(&mut self, name: impl Into<String>, kind: impl Into<String>, dims: Vec<usize>) {
        self.objects.push(ObjectSummary {
            name: name.into(),
            kind: kind.into(),
            dims,
            matrix: None,
        });
    }

    pub fn object_with_matrix(
        &mut self,
        name: impl Into<String>,
        kind: impl Into<String>,
        dims: Vec<usize>,
        matrix: Vec<Vec<u64>>,
    ) {
        self.objects.push(ObjectSummary {
            name: name.into(),
            kind: kind.into(),
            dims,
            matrix: Some(matrix),
        });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for v in &self.verdicts {
            let status = if v.passed { "PASS" } else { "FAIL" };
            match &v.details {
                Some(d) => {
                    let _ = writeln!(out, "{status}  {} -- {}", v.check, d);
                }
                None => {
                    let _ = writeln!(out, "{status}  {}", v.check);
                }
            }
        }
        for o in &self.objects {
            let dims: Vec<String> = o.dims.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "object  {} [{}] dims ({})",
                o.name,
                o.kind,
                dims.join(", ")
            );
            if let Some(m) = &o.matrix {
                for row in m {
                    let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                    let _ = writeln!(out, "        [{}]", cells.join(" "));
                }
            }
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "timing_ms: {t}");
        }
        let summary = if self.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(
            out,
            "result: {summary} ({}/{} checks passed)",
            self.verdicts.iter().filter(|v| v.passed).count(),
            self.verdicts.len()
        );
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
