//! Serialized outputs. Every type here round-trips through JSON unchanged.

use eqfid_core::dynamics::{IntegratorConfig, PairDistance};
use eqfid_core::oracle::QuadConfig;
use eqfid_core::reference_forms::Discrepancy;
use eqfid_core::symbol::{CoefficientRecord, PhaseSpacePoint, PhysicalParams};
use serde::{Deserialize, Serialize};

/// One verification row: a closed form against an independent evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub gamma: Option<f64>,
    /// Where the row was evaluated, e.g. "lambda=1" or "s=3 sign=plus".
    pub at: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub rel_err: f64,
    /// "rel" (rel_err ≤ tolerance), "abs" (|oracle − closed_form| ≤ tolerance)
    /// or "sigma" (|oracle − closed_form| ≤ tolerance · stderr).
    pub criterion: String,
    pub tolerance: f64,
    pub stderr: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub gammas: Vec<f64>,
    pub quad: QuadConfig,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(suite: &str, gammas: Vec<f64>, quad: QuadConfig, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        VerifyReport {
            suite: suite.to_string(),
            gammas,
            quad,
            checks,
            passed,
            failed,
            pass: failed == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianReport {
    pub gamma: f64,
    pub params: PhysicalParams,
    pub point: PhaseSpacePoint,
    pub coefficients: Vec<CoefficientRecord>,
    pub value: f64,
    pub classical: f64,
    pub quantum: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discrepancies: Option<Vec<Discrepancy>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub gamma: f64,
    pub file: String,
    pub records: usize,
    pub energy_drift: f64,
    pub angular_momentum_drift: f64,
    pub dt_warning: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub params: PhysicalParams,
    pub integrator: IntegratorConfig,
    pub effective_dt: f64,
    pub x0: PhaseSpacePoint,
    /// "default" when the built-in starting point was used, else "user".
    pub x0_source: String,
    pub runs: Vec<RunSummary>,
    pub pairs: Vec<PairDistance>,
    pub classical_coincidence: Option<bool>,
}
