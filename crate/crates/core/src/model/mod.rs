//! Finite-volume Vannimenus model on the rooted binary tree.
//!
//! Vertices are heap indices. Weights, partition functions and measures are
//! available both as truncated p-adic values and, for rational boundary
//! fields, as exact rationals.

mod consistency;
mod field;
mod params;
mod partition;
mod recursion;
mod scalar;
mod spin;
mod tree;

use thiserror::Error;

use crate::padic::PadicError;

pub use consistency::{check_consistency, compatibility_residual, field_compatible, recurrence, ConsistencyReport};
pub use field::{BoundaryField, FieldKind, FieldValue};
pub use params::ModelParams;
pub use partition::{measure, partition, partition_terms, weight, weight_exact, MAX_PARTITION_DEPTH};
pub use recursion::{a_coeff, level_factor, verify_z_recursion, ZRecursionReport};
pub use scalar::{EvalMode, Scalar};
pub use spin::{hamiltonian, SpinConfig};
pub use tree::{build_levels, level_of, TreeLevels, MAX_TREE_DEPTH};

pub(crate) use partition::all_weights;
pub(crate) use scalar::rational_norm;
pub(crate) use spin::mask_interaction_sums;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("depth {depth} exceeds the limit {max}")]
    DepthLimit { depth: u32, max: u32 },
    #[error("exact-rational evaluation needs a rational boundary field")]
    ModeUnavailable,
    #[error("partition function is zero to precision")]
    DegeneratePartition,
    #[error("recurrence denominator is zero to precision")]
    DenominatorZeroToPrecision,
    #[error("field does not solve the compatibility recurrence: {0}")]
    InconsistentField(String),
    #[error("boundary field is not invertible at vertex {0}")]
    NonInvertibleField(u64),
    #[error("explicit boundary field has no value at vertex {0}")]
    FieldUnresolved(u64),
    #[error("coupling J must be nonzero")]
    ZeroCoupling,
    #[error("couplings must be equal, got J1 = {j1}, J2 = {j2}")]
    UnequalCouplings { j1: i64, j2: i64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid spin configuration: {0}")]
    InvalidSpinString(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

impl ModelError {
    pub fn name(&self) -> &'static str {
        match self {
            ModelError::DepthLimit { .. } => "DepthLimit",
            ModelError::ModeUnavailable => "ModeUnavailable",
            ModelError::DegeneratePartition => "DegeneratePartition",
            ModelError::DenominatorZeroToPrecision => "DenominatorZeroToPrecision",
            ModelError::InconsistentField(_) => "InconsistentField",
            ModelError::NonInvertibleField(_) => "NonInvertibleField",
            ModelError::FieldUnresolved(_) => "FieldUnresolved",
            ModelError::ZeroCoupling => "ZeroCoupling",
            ModelError::UnequalCouplings { .. } => "UnequalCouplings",
            ModelError::InvalidParams(_) => "InvalidParams",
            ModelError::InvalidSpinString(_) => "InvalidSpinString",
            ModelError::Padic(e) => e.name(),
        }
    }
}

pub type Result<T> = std::result::Result<T, ModelError>;
