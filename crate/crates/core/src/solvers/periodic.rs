use serde::Serialize;

use super::{Result, SolverError};
use crate::model::{field_compatible, recurrence, BoundaryField, FieldValue, ModelParams};
use crate::padic::{Padic, SquareObstruction};

/// A 2-cycle `f(u_3) = u_4`, `f(u_4) = u_3` with both square roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicSolution {
    pub discriminant: Padic,
    pub u3: Padic,
    pub u4: Padic,
    pub h3: Padic,
    pub h4: Padic,
    /// Vanishing orders of `f(u_3) - u_4` and `f(u_4) - u_3`.
    pub cycle_orders: [i64; 2],
    /// Vanishing order of `u_3 u_4 - 1`.
    pub product_order: i64,
    /// `(h_3, h_4)` and `(h_4, h_3)` by level parity.
    #[serde(skip)]
    pub fields: [BoundaryField; 2],
}

/// The condition that rules out 2-periodic fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodicObstruction {
    /// `D(θ) = 1 + 2θ² - 3θ⁴` has no square root.
    NoSqrtDiscriminant,
    /// `u_3` has no square root.
    NoSqrtU3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum PeriodicOutcome {
    Found(PeriodicSolution),
    Absent {
        reason: PeriodicObstruction,
        obstruction: SquareObstruction,
        discriminant: Padic,
    },
}

impl PeriodicOutcome {
    pub fn count(&self) -> usize {
        match self {
            PeriodicOutcome::Found(_) => 2,
            PeriodicOutcome::Absent { .. } => 0,
        }
    }
}

/// 2-periodic fields from `u_{3,4} = (-1 - θ² ± √D(θ)) / (2θ²)`.
pub fn periodic_solutions(params: &ModelParams) -> Result<PeriodicOutcome> {
    let j = params.coupling()?;
    let p = params.prime();
    let k = params.working_precision();
    let guard = params.guard_threshold();
    let one = Padic::one(p, k);
    let theta2 = Padic::power_of_p(p, 4 * j, k);
    let theta4 = Padic::power_of_p(p, 8 * j, k);

    let d = Padic::sum(p, [&one, &theta2.mul_int(2), &theta4.mul_int(-3)])?;
    if d.is_zero() {
        return Err(SolverError::DegenerateDiscriminant);
    }
    if let Some(why) = d.square_obstruction()? {
        return Ok(PeriodicOutcome::Absent {
            reason: PeriodicObstruction::NoSqrtDiscriminant,
            obstruction: why,
            discriminant: d,
        });
    }
    let root = d.sqrt()?;
    let base = one.add(&theta2)?.neg();
    let den = theta2.mul_int(2);
    let u3 = base.add(&root)?.div(&den)?;
    let u4 = base.sub(&root)?.div(&den)?;
    if let Some(why) = u3.square_obstruction()? {
        return Ok(PeriodicOutcome::Absent {
            reason: PeriodicObstruction::NoSqrtU3,
            obstruction: why,
            discriminant: d,
        });
    }
    let h3 = u3.sqrt()?;
    let h4 = u4
        .sqrt()
        .map_err(|e| SolverError::InternalInconsistency(format!("u3 has a square root but u4 does not: {e}")))?;

    let cycle_orders = [
        recurrence(&u3, &u3, params)?.sub(&u4)?.vanishing_order(),
        recurrence(&u4, &u4, params)?.sub(&u3)?.vanishing_order(),
    ];
    let product_order = u3.mul(&u4)?.sub(&one)?.vanishing_order();
    if cycle_orders.iter().any(|&o| o < guard) || product_order < guard {
        return Err(SolverError::InternalInconsistency(format!(
            "2-cycle check failed: orders {cycle_orders:?}, product order {product_order}"
        )));
    }
    if u3.agrees_with(&u4, guard)? {
        return Err(SolverError::InternalInconsistency(
            "u3 = u4: the cycle is a fixed point".into(),
        ));
    }

    let f3 = FieldValue::from_padic(h3.clone());
    let f4 = FieldValue::from_padic(h4.clone());
    let fields = [
        BoundaryField::two_periodic(f3.clone(), f4.clone())?,
        BoundaryField::two_periodic(f4, f3)?,
    ];
    for f in &fields {
        if !field_compatible(f, 3, params)? {
            return Err(SolverError::InternalInconsistency(
                "2-periodic field fails the recurrence".into(),
            ));
        }
    }
    Ok(PeriodicOutcome::Found(PeriodicSolution {
        discriminant: d,
        u3,
        u4,
        h3,
        h4,
        cycle_orders,
        product_order,
        fields,
    }))
}
