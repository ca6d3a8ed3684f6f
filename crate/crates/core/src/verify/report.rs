use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ElementType;

/// One row of a classification run over signature-involution pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub algebra: String,
    pub tau: String,
    pub sigma: String,
    /// `[h_l, h_m, q_l, q_m]`.
    pub dims: [usize; 4],
    pub dissecting: bool,
    pub x0_type: Option<ElementType>,
    pub class: Option<String>,
}

/// Outcome of a single check. A failed report always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub passed: bool,
    pub witness: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            parameters: BTreeMap::new(),
            passed: true,
            witness: BTreeMap::new(),
            timing_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.witness.insert(key.to_string(), value.to_string());
    }

    /// Records a failed condition; the first failure's reason is kept.
    pub fn fail(&mut self, reason: impl ToString) {
        if self.passed {
            self.passed = false;
            self.witness.insert("reason".into(), reason.to_string());
        }
    }

    /// Fails with `reason` unless `ok`.
    pub fn require(&mut self, ok: bool, reason: impl ToString) {
        if !ok {
            self.fail(reason);
        }
    }

    /// A report for a check that could not run.
    pub fn errored(name: impl Into<String>, error: impl ToString) -> Self {
        let mut r = Self::new(name);
        r.fail(format!("error: {}", error.to_string()));
        r
    }
}

pub(crate) fn format_vector<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}
