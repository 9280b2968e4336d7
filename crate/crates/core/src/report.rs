//! Machine-readable pass/fail reports for the verification suites.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub range: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl Report {
    pub fn pass(claim: impl Into<String>, range: impl Into<String>) -> Self {
        Report {
            claim: claim.into(),
            range: range.into(),
            status: Status::Pass,
            first_failure: None,
        }
    }

    pub fn fail(
        claim: impl Into<String>,
        range: impl Into<String>,
        failure: impl Into<String>,
    ) -> Self {
        Report {
            claim: claim.into(),
            range: range.into(),
            status: Status::Fail,
            first_failure: Some(failure.into()),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(f, "PASS  {} ({})", self.claim, self.range),
            Some(detail) => write!(f, "FAIL  {} ({}): {}", self.claim, self.range, detail),
        }
    }
}
