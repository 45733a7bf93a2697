//! JSON-line check records shared by the verification suites and the CLI.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Measured data recorded for review rather than asserted.
    Finding,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub tree: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn new(
        tree: impl Into<String>,
        j: Option<usize>,
        check: impl Into<String>,
        status: Status,
    ) -> Self {
        CheckRecord {
            tree: tree.into(),
            j,
            check: check.into(),
            status,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
