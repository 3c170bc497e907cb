use serde::Serialize;

use super::{Result, SolverError};
use crate::model::{recurrence, BoundaryField, FieldValue, ModelParams};
use crate::padic::{NormValue, Padic};

/// A fixed point `u_i` of `u ↦ f(u, u)` with a square root `h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TISolution {
    pub index: usize,
    pub u: Padic,
    pub h: Padic,
    pub h_norm: NormValue,
    /// Vanishing order of `f(u, u) - u`.
    pub residual_order: i64,
    #[serde(skip)]
    pub field: BoundaryField,
}

/// Vanishing order of `f(u, u) - u`.
pub(crate) fn fixed_point_residual(u: &Padic, params: &ModelParams) -> Result<i64> {
    Ok(recurrence(u, u, params)?.sub(u)?.vanishing_order())
}

/// All translation-invariant fields: `u_0 = 1` and, when the square roots
/// exist, `u_{1,2} = (θ² - 3 ± √((1 - θ²)(5 - θ²))) / 2`.
pub fn ti_solutions(params: &ModelParams) -> Result<Vec<TISolution>> {
    let j = params.coupling()?;
    let p = params.prime();
    let k = params.working_precision();
    let one = Padic::one(p, k);
    let theta2 = Padic::power_of_p(p, 4 * j, k);

    let mut candidates = vec![(0, one.clone(), Some(one.clone()))];
    let delta = one.sub(&theta2)?.mul(&Padic::from_int(5, p, k).sub(&theta2)?)?;
    if delta.sqrt_exists()? {
        let root = delta.sqrt()?;
        let base = theta2.sub(&Padic::from_int(3, p, k))?;
        for (i, r) in [(1, root.clone()), (2, root.neg())] {
            let u = base.add(&r)?.div_int(2)?;
            let h = if u.sqrt_exists()? { Some(u.sqrt()?) } else { None };
            candidates.push((i, u, h));
        }
    }

    let guard = params.guard_threshold();
    let mut out = Vec::new();
    for (index, u, h) in candidates {
        let Some(h) = h else { continue };
        let residual_order = fixed_point_residual(&u, params)?;
        if residual_order < guard {
            return Err(SolverError::InternalInconsistency(format!(
                "u{index} misses the fixed-point equation at order {residual_order}"
            )));
        }
        if !h.mul(&h)?.agrees_with(&u, guard)? {
            return Err(SolverError::InternalInconsistency(format!(
                "h{index}² differs from u{index}"
            )));
        }
        let value = if index == 0 {
            FieldValue::rational(1, 1, params)?
        } else {
            FieldValue::from_padic(h.clone())
        };
        out.push(TISolution {
            index,
            h_norm: h.norm(),
            u,
            h,
            residual_order,
            field: BoundaryField::translation_invariant(value)?,
        });
    }
    Ok(out)
}
