//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::coeffs::Ring;
use crate::tableaux::Partition;

/// One pass/fail check. A failing check carries a replayable counterexample.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Check {
    pub fn pass(name: &str) -> Check {
        Check { name: name.to_string(), passed: true, detail: None, counterexample: None }
    }

    pub fn expect(name: &str, passed: bool, detail: String) -> Check {
        Check { name: name.to_string(), passed, detail: Some(detail), counterexample: None }
    }

    pub fn fail(name: &str, counterexample: Value) -> Check {
        Check { name: name.to_string(), passed: false, detail: None, counterexample: Some(counterexample) }
    }

    /// Passes if `first_failure` is `None`.
    pub fn from_search(name: &str, first_failure: Option<Value>) -> Check {
        match first_failure {
            None => Check::pass(name),
            Some(v) => Check::fail(name, v),
        }
    }
}

/// Results for one `(λ, m, ring)` instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceReport {
    pub shape: Partition,
    pub entries: u32,
    pub ring: String,
    pub dims: BTreeMap<String, u64>,
    pub ranks: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elementary_divisors: Option<Vec<String>>,
    pub checks: Vec<Check>,
    pub ok: bool,
}

impl InstanceReport {
    pub fn new(shape: &Partition, entries: u32, ring: Ring) -> InstanceReport {
        InstanceReport {
            shape: shape.clone(),
            entries,
            ring: ring.to_string(),
            dims: BTreeMap::new(),
            ranks: BTreeMap::new(),
            elementary_divisors: None,
            checks: Vec::new(),
            ok: true,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.ok &= check.passed;
        self.checks.push(check);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// A whole run: instances in deterministic order plus timing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub instances: Vec<InstanceReport>,
    pub ok: bool,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn new(command: &str, instances: Vec<InstanceReport>, wall_time_ms: u128) -> VerificationReport {
        let ok = instances.iter().all(|i| i.ok);
        VerificationReport { command: command.to_string(), instances, ok, wall_time_ms }
    }
}
