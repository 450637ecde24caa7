//! Closed-form bounds and numeric checks of the inequalities behind the
//! game bounds. Formulas are generic over [`Real`](crate::scalar::Real);
//! Monte Carlo estimates run in `f64`.

mod bins;
mod bounds;
mod bset;
mod chernoff;
mod deb;
mod density;
mod montecarlo;
pub mod suite;

pub use bins::{bins_bound, bins_check, bins_check_truncated, bins_exact, BinsCheck, ZERO_MASS_LIMIT};
pub use bounds::{
    eval_bounds, formula_gap_closed_form, formula_holds, lower_bound_parameters, BoundParams, FormulaCheck,
};
pub use bset::b_set;
pub use chernoff::{chernoff, chernoff_check, ChernoffCheck, Tail};
pub use deb::{f_lower_bound_check, x0, DebCheck};
pub use density::{
    density_predicate_check, hypothesis, sigma_max, DensityLemma, DensityParams, DensityReport, Hypothesis,
    SearchMode, Violation,
};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Hypergraph(#[from] crate::HypergraphError),
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T, AnalysisError> {
    Err(AnalysisError::Domain(msg.into()))
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: serde_json::Value,
    pub value: f64,
    pub bound: f64,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(check: &str, params: serde_json::Value, value: f64, bound: f64, holds: bool) -> Self {
        CheckRecord { check: check.to_string(), params, value, bound, holds, stderr: None, note: None }
    }

    pub fn with_stderr(mut self, stderr: f64) -> Self {
        self.stderr = Some(stderr);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}
