use num_rational::BigRational;
use serde::Serialize;

use super::Result;
use crate::model::{
    all_weights, level_factor, rational_norm, BoundaryField, EvalMode, ModelError, ModelParams, SpinConfig,
};
use crate::padic::{NormValue, Padic, PadicError};

pub const MAX_GROWTH_DEPTH: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthVerdict {
    Bounded,
    UnboundedTrend,
}

/// Norms of finite-volume measures at depths `1..=n_max`, on the
/// `log_p |·|_p` scale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthProfile {
    pub prime: u64,
    pub coupling: i64,
    pub mode: EvalMode,
    pub depths: Vec<u32>,
    /// `log_p |μ^{(n)}(σ*_n)|_p` for the sibling-alternating configuration.
    pub star_exponents: Vec<i64>,
    /// `max_σ log_p |μ^{(n)}(σ)|_p`.
    pub max_exponents: Vec<i64>,
    /// `log_p |Z_{n,h}|_p`.
    pub partition_exponents: Vec<i64>,
    /// `log_p |A_m|_p` for `m = 0..n_max`; `None` where the field does not
    /// solve the recurrence and `A_m` is undefined.
    pub level_factor_exponents: Vec<Option<i64>>,
    /// `log_p |a_h(x)|_p` at the root.
    pub vertex_a_exponent: Option<i64>,
    pub max_bounded_by_one: bool,
    pub verdict: GrowthVerdict,
}

fn log_norm(v: NormValue) -> Result<i64> {
    v.log_norm()
        .ok_or_else(|| PadicError::InsufficientPrecision("a weight vanished to working precision".into()).into())
}

/// `(log |Z|, log |w_σ| for every σ)` at depth `n`.
fn weight_norms(n: u32, field: &BoundaryField, params: &ModelParams, mode: EvalMode) -> Result<(i64, Vec<i64>)> {
    let p = params.prime();
    let norms: Vec<NormValue>;
    let z: NormValue;
    match mode {
        EvalMode::ExactRational => {
            let w = all_weights::<BigRational>(n, field, params)?;
            z = rational_norm(&w.iter().sum(), p);
            norms = w.iter().map(|x| rational_norm(x, p)).collect();
        }
        EvalMode::Padic => {
            let w = all_weights::<Padic>(n, field, params)?;
            z = Padic::sum(p, &w)?.norm();
            norms = w.iter().map(Padic::norm).collect();
        }
    }
    if z == NormValue::Zero {
        return Err(ModelError::DegeneratePartition.into());
    }
    Ok((log_norm(z)?, norms.into_iter().map(log_norm).collect::<Result<_>>()?))
}

/// Strictly increasing with each increment at least double the previous one.
fn is_unbounded_trend(e: &[i64]) -> bool {
    if e.len() < 2 {
        return false;
    }
    let d: Vec<i64> = e.windows(2).map(|w| w[1] - w[0]).collect();
    d.iter().all(|&x| x > 0) && d.windows(2).all(|w| w[1] >= 2 * w[0])
}

/// Exhaustive norm profile of `μ_h^{(n)}` for `n = 1..=n_max`.
pub fn growth_profile(params: &ModelParams, field: &BoundaryField, n_max: u32) -> Result<GrowthProfile> {
    let j = params.coupling()?;
    if n_max > MAX_GROWTH_DEPTH {
        return Err(ModelError::DepthLimit {
            depth: n_max,
            max: MAX_GROWTH_DEPTH,
        }
        .into());
    }
    if n_max == 0 {
        return Err(ModelError::InvalidParams("growth profile needs depth ≥ 1".into()).into());
    }
    let mode = if field.is_rational() {
        EvalMode::ExactRational
    } else {
        EvalMode::Padic
    };
    let mut star_exponents = Vec::new();
    let mut max_exponents = Vec::new();
    let mut partition_exponents = Vec::new();
    for n in 1..=n_max {
        let (z, w) = weight_norms(n, field, params, mode)?;
        let star = SpinConfig::sibling_alternating(n)?.mask().expect("shallow depth") as usize;
        star_exponents.push(w[star] - z);
        max_exponents.push(w.iter().max().expect("nonempty") - z);
        partition_exponents.push(z);
    }
    let mut level_factor_exponents = Vec::new();
    for m in 0..n_max {
        level_factor_exponents.push(match level_factor(m, field, params) {
            Ok(a) => Some(log_norm(a.norm())?),
            Err(ModelError::InconsistentField(_)) => None,
            Err(e) => return Err(e.into()),
        });
    }
    let verdict = if is_unbounded_trend(&star_exponents) {
        GrowthVerdict::UnboundedTrend
    } else {
        GrowthVerdict::Bounded
    };
    Ok(GrowthProfile {
        prime: params.prime(),
        coupling: j,
        mode,
        depths: (1..=n_max).collect(),
        max_bounded_by_one: max_exponents.iter().all(|&e| e <= 0),
        vertex_a_exponent: level_factor_exponents[0],
        star_exponents,
        max_exponents,
        partition_exponents,
        level_factor_exponents,
        verdict,
    })
}
