//! Verification report records, serialized as schema "v1" JSON.

use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub family: String,
    #[serde(rename = "type")]
    pub lie: String,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub status: Status,
    pub elapsed_ms: u128,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Helper for timing a single check.
pub struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    pub fn ms(&self) -> u128 {
        self.0.elapsed().as_millis()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    /// orientation flag of the ultra-discretized data: the valuation
    /// convention corresponds to the degree convention applied to the
    /// reciprocal structure functions
    pub ud_orientation: &'static str,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Self {
        Report { schema: "v1", ud_orientation: "valuation (reciprocal degree)", checks }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}  {}  [{} ms, lhs {} terms, rhs {} terms]{}\n",
                match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                },
                c.family,
                c.elapsed_ms,
                c.lhs_terms,
                c.rhs_terms,
                c.detail.as_deref().map(|d| format!("  {d}")).unwrap_or_default(),
            ));
        }
        out
    }
}
