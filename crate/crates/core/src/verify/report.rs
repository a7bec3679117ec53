use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first point where two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub at: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Counterexample {
    pub fn new<I, K>(at: I, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self
    where
        I: IntoIterator<Item = (K, i64)>,
        K: Into<String>,
    {
        Counterexample {
            at: at.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn from_error(e: &Error) -> Self {
        Counterexample { at: BTreeMap::new(), lhs: "error".into(), rhs: String::new(), detail: Some(e.to_string()) }
    }
}

/// Outcome of checking one identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
    /// Free-form qualifier, e.g. "consistent up to n = 8" for open conjectures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl VerificationReport {
    /// Time `check`; `Ok(None)` passes, `Ok(Some(cx))` or `Err` fails.
    pub fn run<F>(identity: &str, n: Option<usize>, check: F) -> Self
    where
        F: FnOnce() -> Result<Option<Counterexample>, Error>,
    {
        let start = Instant::now();
        let outcome = check();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let counterexample = match outcome {
            Ok(cx) => cx,
            Err(e) => Some(Counterexample::from_error(&e)),
        };
        VerificationReport {
            identity: identity.to_string(),
            n,
            parameters: BTreeMap::new(),
            status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample,
            elapsed_ms,
            label: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Conjunction of two reports for the same identity; the counterexample at
    /// the smaller `n` is kept and elapsed times add up.
    pub fn merge(self, other: VerificationReport) -> VerificationReport {
        let n = match (self.n, other.n) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let counterexample = match (self.counterexample.clone(), other.counterexample.clone()) {
            (Some(a), Some(b)) => Some(if self.n <= other.n { a } else { b }),
            (a, b) => a.or(b),
        };
        let mut parameters = self.parameters;
        parameters.extend(other.parameters);
        VerificationReport {
            identity: self.identity,
            n,
            parameters,
            status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample,
            elapsed_ms: self.elapsed_ms + other.elapsed_ms,
            label: self.label.or(other.label),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
