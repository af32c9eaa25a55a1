//! Structured validation reports.
//!
//! Validators return a list of named checks, each either confirmed or carrying
//! explicit counterexample coordinates. Reports serialize deterministically:
//! checks appear in the order the validator ran them and counterexample
//! coordinates are produced in ascending lexicographic order.

use serde::{Deserialize, Serialize};

/// One concrete failure site: the tuple of object/element indices at which an
/// equation broke, plus a human-readable account of the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub at: Vec<usize>,
    pub detail: String,
}

/// Outcome of one axiom or coherence condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Stable identifier, e.g. "composition-associativity" or "interchange-naturality".
    pub id: String,
    /// Axiom label where the product's numbering applies, e.g. "(3)".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axiom: Option<String>,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub artifacts: Vec<String>,
}

/// Cap on stored counterexamples per check; failures beyond this are counted
/// by the validator but not materialized, keeping reports readable.
pub const MAX_COUNTEREXAMPLES: usize = 8;

impl Report {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass)
    }

    pub fn from_checks(checks: Vec<Check>) -> Report {
        let ok = checks.iter().all(|c| c.ok);
        Report {
            status: if ok { Status::Pass } else { Status::Fail },
            checks,
            artifacts: Vec::new(),
        }
    }

    /// Merges several reports into one, concatenating checks in order.
    pub fn merge(parts: Vec<Report>) -> Report {
        let mut checks = Vec::new();
        let mut artifacts = Vec::new();
        for mut p in parts {
            checks.append(&mut p.checks);
            artifacts.append(&mut p.artifacts);
        }
        let mut r = Report::from_checks(checks);
        r.artifacts = artifacts;
        r
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.ok)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn failing_axioms(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.ok)
            .filter_map(|c| c.axiom.as_deref())
            .collect()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Incremental builder used inside validators.
pub struct CheckBuilder {
    id: String,
    axiom: Option<String>,
    counterexamples: Vec<Counterexample>,
    failures: usize,
}

impl CheckBuilder {
    pub fn new(id: &str) -> Self {
        CheckBuilder { id: id.to_string(), axiom: None, counterexamples: Vec::new(), failures: 0 }
    }

    pub fn axiom(mut self, label: &str) -> Self {
        self.axiom = Some(label.to_string());
        self
    }

    pub fn fail(&mut self, at: Vec<usize>, detail: impl Into<String>) {
        self.failures += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { at, detail: detail.into() });
        }
    }

    /// Absorbs the outcomes of a batch of independent case checks, where each
    /// failing case is reported as `(coordinates, detail)`.
    pub fn extend_failures(&mut self, fails: Vec<(Vec<usize>, String)>) {
        for (at, detail) in fails {
            self.fail(at, detail);
        }
    }

    pub fn finish(self) -> Check {
        Check {
            id: self.id,
            axiom: self.axiom,
            ok: self.failures == 0,
            counterexamples: self.counterexamples,
        }
    }
}
