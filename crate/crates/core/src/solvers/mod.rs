//! Translation-invariant and 2-periodic boundary fields, their existence
//! and boundedness classification, and norm growth profiles.

mod classify;
mod growth;
mod periodic;
mod table;
mod ti;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::model::{BoundaryField, ModelError, ModelParams};
use crate::padic::PadicError;
use crate::residue::ResidueError;

pub(crate) use classify::norm_discrepancies;
pub use classify::{
    classify, classify_with, hamiltonian_extreme_exponents, Boundedness, BoundednessEntry, ClassificationReport,
};
pub use growth::{growth_profile, GrowthProfile, GrowthVerdict, MAX_GROWTH_DEPTH};
pub use periodic::{periodic_solutions, PeriodicObstruction, PeriodicOutcome, PeriodicSolution};
pub use table::{published_table_value, sign, table1, Table1Row};
pub use ti::{ti_solutions, TISolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Residue(#[from] ResidueError),
    #[error("discriminant is zero to precision")]
    DegenerateDiscriminant,
    #[error("field {0} is not available for these parameters")]
    FieldUnavailable(FieldLabel),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl From<PadicError> for SolverError {
    fn from(e: PadicError) -> Self {
        SolverError::Model(ModelError::Padic(e))
    }
}

impl SolverError {
    pub fn name(&self) -> &'static str {
        match self {
            SolverError::Model(e) => e.name(),
            SolverError::Residue(e) => e.name(),
            SolverError::DegenerateDiscriminant => "DegenerateDiscriminant",
            SolverError::FieldUnavailable(_) => "FieldUnavailable",
            SolverError::InternalInconsistency(_) => "InternalInconsistency",
        }
    }
}

pub type Result<T> = std::result::Result<T, SolverError>;

/// A published value next to the value computed here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub topic: String,
    pub paper_value: String,
    pub computed_value: String,
    pub note: String,
}

/// Names of the solver-produced fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldLabel {
    H0,
    H1,
    H2,
    Per1,
    Per2,
}

impl FieldLabel {
    pub const ALL: [FieldLabel; 5] = [
        FieldLabel::H0,
        FieldLabel::H1,
        FieldLabel::H2,
        FieldLabel::Per1,
        FieldLabel::Per2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FieldLabel::H0 => "h0",
            FieldLabel::H1 => "h1",
            FieldLabel::H2 => "h2",
            FieldLabel::Per1 => "per1",
            FieldLabel::Per2 => "per2",
        }
    }

    fn ti_index(self) -> Option<usize> {
        match self {
            FieldLabel::H0 => Some(0),
            FieldLabel::H1 => Some(1),
            FieldLabel::H2 => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FieldLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FieldLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown field {s:?}; expected one of h0, h1, h2, per1, per2"))
    }
}

/// Every boundary field the solvers produce for `params`, labelled.
pub fn solution_fields(params: &ModelParams) -> Result<Vec<(FieldLabel, BoundaryField)>> {
    let mut out: Vec<(FieldLabel, BoundaryField)> = ti_solutions(params)?
        .into_iter()
        .map(|s| (FieldLabel::ALL[s.index], s.field))
        .collect();
    if let PeriodicOutcome::Found(sol) = periodic_solutions(params)? {
        let [a, b] = sol.fields;
        out.push((FieldLabel::Per1, a));
        out.push((FieldLabel::Per2, b));
    }
    Ok(out)
}

/// The field named `label`, or `FieldUnavailable` when it does not exist.
pub fn solution_field(params: &ModelParams, label: FieldLabel) -> Result<BoundaryField> {
    if let Some(i) = label.ti_index() {
        return ti_solutions(params)?
            .into_iter()
            .find(|s| s.index == i)
            .map(|s| s.field)
            .ok_or(SolverError::FieldUnavailable(label));
    }
    match periodic_solutions(params)? {
        PeriodicOutcome::Found(sol) => {
            let [a, b] = sol.fields;
            Ok(if label == FieldLabel::Per1 { a } else { b })
        }
        PeriodicOutcome::Absent { .. } => Err(SolverError::FieldUnavailable(label)),
    }
}

/// Per-vertex `log_p |a_h|_p` as stated for the translation-invariant fields.
pub fn stated_a_exponent(label: FieldLabel, p: u64, j: i64) -> Option<i64> {
    match (label, j > 0) {
        (FieldLabel::H0, true) if p == 3 => Some(j - 1),
        (FieldLabel::H0, true) => Some(j),
        (FieldLabel::H0, false) => Some(-3 * j),
        (FieldLabel::H1 | FieldLabel::H2, true) => Some(j),
        (FieldLabel::H1 | FieldLabel::H2, false) => Some(-5 * j),
        _ => None,
    }
}

/// `log_p |Z_{n,h}|_p` as stated for the translation-invariant fields.
pub fn stated_partition_exponent(label: FieldLabel, p: u64, j: i64, n: u32) -> Option<i64> {
    let m = (1i64 << n) - 2;
    match (label, j > 0) {
        (FieldLabel::H0, true) if p == 3 => Some((j - 1) * m),
        (FieldLabel::H0 | FieldLabel::H1 | FieldLabel::H2, true) => Some(j * m),
        (FieldLabel::H0, false) => Some(-j * (3 * m)),
        (FieldLabel::H1 | FieldLabel::H2, false) => Some(-j * (5 * m)),
        _ => None,
    }
}
