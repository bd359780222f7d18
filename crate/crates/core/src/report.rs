//! Verification report types shared by all modules and the CLI.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Case {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    /// Case that passes iff a residual is zero; detail records the count of
    /// nonzero residual entries.
    pub fn residual(name: impl Into<String>, nonzero_entries: usize) -> Self {
        Case {
            name: name.into(),
            pass: nonzero_entries == 0,
            detail: format!("residual_nonzero_entries={nonzero_entries}"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub params: serde_json::Value,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            cases: Vec::new(),
            params: serde_json::json!({}),
        }
    }

    pub fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.cases
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }
}
