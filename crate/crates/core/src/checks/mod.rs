//! Self-contained numerical checks of counting statements, degree bounds,
//! inclusions and integer inequalities. Each check recomputes its quantity
//! by enumeration and compares it with a closed form.

mod bounds;
mod counting;
mod grid;
mod suite;

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub use bounds::{
    check_max_deg, check_min_degrees, check_star_box, check_star_box_composite, check_star_degree_bounds,
};
pub use counting::{check_bijection, check_counting, check_delta_sizes, check_hook_addition, check_subset_sizes};
pub use grid::{check_appendix, cubic_gap, digit_exponent_bound_holds, sharp_cubic_gap_times6};
pub use suite::{run_suite, SuiteConfig};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub check_id: String,
    pub params: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// The record without its timing, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

/// What a check body reports.
pub(crate) enum Outcome {
    Pass(Value),
    Fail(Value),
    Skipped(String),
}

pub(crate) fn run(id: &str, params: Value, body: impl FnOnce() -> Result<Outcome>) -> CheckResult {
    let start = Instant::now();
    let (status, witness) = match body() {
        Ok(Outcome::Pass(w)) => (Status::Pass, Some(w).filter(|w| !w.is_null())),
        Ok(Outcome::Fail(w)) => (Status::Fail, Some(w)),
        Ok(Outcome::Skipped(why)) => (Status::Skipped, Some(Value::String(why))),
        Err(e) => (Status::Fail, Some(serde_json::json!({ "error": e.to_string() }))),
    };
    CheckResult { check_id: id.to_string(), params, status, witness, elapsed_ms: start.elapsed().as_millis() as u64 }
}

pub(crate) fn outcome(ok: bool, witness: Value) -> Outcome {
    if ok {
        Outcome::Pass(witness)
    } else {
        Outcome::Fail(witness)
    }
}
