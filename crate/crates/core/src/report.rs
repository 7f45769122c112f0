//! Structured check outcomes and their JSON form.
//!
//! Every number is written as a decimal string so that large counts survive
//! interchange. JSON objects are built through `serde_json::Value`, whose
//! maps keep keys sorted.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize, Serializer};

pub fn as_decimal_string<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// The reference value a check compares against and where it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub value: String,
    pub source: String,
}

impl Expected {
    pub fn new(value: impl Display, source: &str) -> Self {
        Expected {
            value: value.to_string(),
            source: source.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    /// Parameter range covered, such as `n=6` or `3<=k<=9`.
    pub range: String,
    pub graphs_examined: u64,
    pub extremal_value: Option<String>,
    /// Canonical graph6 key or parameter description of the extremal case.
    pub witness: Option<String>,
    pub expected: Option<Expected>,
    pub passed: bool,
    /// Observations that do not decide `passed`, in a fixed order.
    pub findings: Vec<String>,
    pub details: BTreeMap<String, String>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn new(claim_id: &str, range: impl Into<String>) -> Self {
        VerificationReport {
            claim_id: claim_id.to_string(),
            range: range.into(),
            graphs_examined: 0,
            extremal_value: None,
            witness: None,
            expected: None,
            passed: false,
            findings: Vec::new(),
            details: BTreeMap::new(),
            runtime_ms: 0,
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Display) {
        self.details.insert(key.to_string(), value.to_string());
    }

    /// Copy with the runtime zeroed, for content comparison.
    pub fn without_runtime(&self) -> Self {
        VerificationReport {
            runtime_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value["graphs_examined"] = self.graphs_examined.to_string().into();
        value["runtime_ms"] = self.runtime_ms.to_string().into();
        value
    }

    /// `true` when a witness is present whenever graphs were examined.
    pub fn is_well_formed(&self) -> bool {
        self.graphs_examined == 0 || self.witness.is_some()
    }
}

/// Removes every `runtime_ms` field, recursively.
pub fn strip_runtime(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("runtime_ms");
            map.values_mut().for_each(strip_runtime);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_runtime),
        _ => {}
    }
}
