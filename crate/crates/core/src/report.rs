//! Structured pass/fail records produced by every verification suite.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

pub const REPORT_SCHEMA: &str = "bihom-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// The first failing instance of an axiom: which basis elements, and the
/// nonzero difference of the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    pub residual: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub axiom: String,
    pub status: Status,
    pub citation: String,
    /// Number of basis tuples evaluated.
    pub checked: usize,
    /// Number of basis tuples with a nonzero residual.
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Non-failing observations, e.g. differences from reference tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoEntry {
    pub topic: String,
    pub message: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub rows: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Toolchain {
    pub version: String,
    pub probe_seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: String,
    pub suite: String,
    pub entries: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub info: Vec<InfoEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub results: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub toolchain: Option<Toolchain>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            schema: REPORT_SCHEMA.to_string(),
            suite: suite.into(),
            entries: Vec::new(),
            info: Vec::new(),
            results: None,
            toolchain: None,
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    /// Appends another report's entries, prefixing their axiom ids.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            if !prefix.is_empty() {
                e.axiom = format!("{prefix}/{}", e.axiom);
            }
            self.entries.push(e);
        }
        self.info.extend(other.info);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn entry(&self, axiom: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        for e in &self.entries {
            write!(f, "{}  {:<48} {}", e.status, e.axiom, e.citation)?;
            if e.checked > 0 {
                write!(f, "  [{} checked", e.checked)?;
                if e.failures > 0 {
                    write!(f, ", {} failing", e.failures)?;
                }
                write!(f, "]")?;
            }
            writeln!(f)?;
            if let Some(w) = &e.witness {
                let res: Vec<String> = w.residual.iter().map(ToString::to_string).collect();
                writeln!(f, "      witness ({}) residual [{}]", w.tuple.join(", "), res.join(", "))?;
            }
            if let Some(n) = &e.note {
                writeln!(f, "      note: {n}")?;
            }
        }
        for i in &self.info {
            writeln!(f, "INFO  {}: {}", i.topic, i.message)?;
            for r in &i.rows {
                writeln!(f, "      {r}")?;
            }
        }
        if let Some(results) = &self.results {
            writeln!(
                f,
                "results: {}",
                serde_json::to_string_pretty(results).expect("json value")
            )?;
        }
        write!(
            f,
            "summary: {} pass, {} fail, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )
    }
}

/// Accumulates evaluations of one axiom over many basis tuples.
pub(crate) struct AxiomCheck {
    axiom: String,
    citation: String,
    checked: usize,
    failures: usize,
    witness: Option<Witness>,
}

impl AxiomCheck {
    pub(crate) fn new(axiom: &str, citation: &str) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            citation: citation.to_string(),
            checked: 0,
            failures: 0,
            witness: None,
        }
    }

    /// Records one tuple whose two sides differ by `residual`.
    pub(crate) fn record(&mut self, tuple: impl FnOnce() -> Vec<String>, residual: Vec<Scalar>) {
        self.checked += 1;
        if residual.iter().any(|x| !x.is_zero()) {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(Witness {
                    tuple: tuple(),
                    residual,
                });
            }
        }
    }

    pub(crate) fn finish(self) -> CheckEntry {
        CheckEntry {
            axiom: self.axiom,
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            citation: self.citation,
            checked: self.checked,
            failures: self.failures,
            witness: self.witness,
            note: None,
        }
    }
}

pub(crate) fn skipped(axiom: &str, citation: &str, note: &str) -> CheckEntry {
    CheckEntry {
        axiom: axiom.to_string(),
        status: Status::Skipped,
        citation: citation.to_string(),
        checked: 0,
        failures: 0,
        witness: None,
        note: Some(note.to_string()),
    }
}
