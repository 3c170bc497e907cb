use serde::Serialize;

use super::field::BoundaryField;
use super::partition::all_weights_padic;
use super::tree::TreeLevels;
use super::{ModelError, ModelParams, Result};
use crate::padic::Padic;

/// The factor `a_h(x)` with `Σ_{σ(y), σ(z)} p^{…} h_y^{σ(y)} h_z^{σ(z)} = a_h(x) h_x^{σ(x)}`.
///
/// Computed from the `σ(x) = +1` sum; the `σ(x) = -1` sum and the closed-form
/// radicand `a²` are both checked against it.
pub fn a_coeff(h_x: &Padic, h_y: &Padic, h_z: &Padic, params: &ModelParams) -> Result<Padic> {
    let j = params.coupling()?;
    let p = params.prime();
    let guard = params.guard_threshold();
    let yz = h_y.mul(h_z)?;
    let y_inv = h_y.inv()?;
    let z_inv = h_z.inv()?;
    let cross = y_inv.mul(h_z)?.add(&h_y.mul(&z_inv)?)?;
    let yz_inv = y_inv.mul(&z_inv)?;

    let s_plus = yz.mul_pow_p(3 * j).add(&cross.add(&yz_inv)?.mul_pow_p(-j))?;
    let s_minus = yz.add(&cross)?.mul_pow_p(-j).add(&yz_inv.mul_pow_p(3 * j))?;
    let a = s_plus.div(h_x)?;
    let a_alt = s_minus.mul(h_x)?;
    let order = a.sub(&a_alt)?.vanishing_order();
    if order < guard {
        return Err(ModelError::InconsistentField(format!(
            "the two spin sums disagree at order {order}, need {guard}"
        )));
    }

    let k = params.working_precision();
    let y2 = h_y.mul(h_y)?;
    let z2 = h_z.mul(h_z)?;
    let y2z2 = y2.mul(&z2)?;
    let s = y2.add(&z2)?;
    let left = Padic::sum(p, [&y2z2.mul_pow_p(4 * j), &s, &Padic::one(p, k)])?;
    let right = Padic::sum(p, [&y2z2, &s, &Padic::power_of_p(p, 4 * j, k)])?;
    let radicand = left.mul(&right)?.div(&y2z2.mul_pow_p(2 * j))?;
    let order = a.mul(&a)?.sub(&radicand)?.vanishing_order();
    if order < guard {
        return Err(ModelError::InconsistentField(format!(
            "a² differs from the closed-form radicand at order {order}, need {guard}"
        )));
    }
    Ok(a)
}

fn vertex_a(field: &BoundaryField, x: u64, params: &ModelParams) -> Result<Padic> {
    let h = |v: u64| field.value_at(v).map(|f| f.padic());
    a_coeff(h(x)?, h(2 * x)?, h(2 * x + 1)?, params)
}

/// `A_n = ∏_{x ∈ W_n} a_h(x)`.
pub fn level_factor(n: u32, field: &BoundaryField, params: &ModelParams) -> Result<Padic> {
    let tree = TreeLevels::new(n + 1)?;
    if field.is_level_uniform() {
        return Ok(vertex_a(field, 1u64 << n, params)?.pow(1u32 << n));
    }
    let mut acc: Option<Padic> = None;
    for x in tree.level(n) {
        let a = vertex_a(field, x, params)?;
        acc = Some(match acc {
            None => a,
            Some(t) => t.mul(&a)?,
        });
    }
    Ok(acc.expect("levels are nonempty"))
}

/// Brute-force check of `Z_{n+1} = A_n Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZRecursionReport {
    pub depth: u32,
    pub pass: bool,
    pub threshold: i64,
    /// Vanishing order of `Z_{n+1} - A_n Z_n`.
    pub mismatch_order: i64,
    pub level_factor: Padic,
    pub partition: Padic,
    pub partition_next: Padic,
}

pub fn verify_z_recursion(n: u32, field: &BoundaryField, params: &ModelParams) -> Result<ZRecursionReport> {
    if n > 2 {
        return Err(ModelError::DepthLimit { depth: n, max: 2 });
    }
    let p = params.prime();
    let a_n = level_factor(n, field, params)?;
    let z = Padic::sum(p, &all_weights_padic(n, field, params)?)?;
    let z_next = Padic::sum(p, &all_weights_padic(n + 1, field, params)?)?;
    let mismatch_order = z_next.sub(&a_n.mul(&z)?)?.vanishing_order();
    let threshold = params.guard_threshold();
    Ok(ZRecursionReport {
        depth: n,
        pass: mismatch_order >= threshold,
        threshold,
        mismatch_order,
        level_factor: a_n,
        partition: z,
        partition_next: z_next,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::FieldValue;
    use crate::padic::NormValue;

    fn unit(p: u64, j: i64) -> (ModelParams, BoundaryField) {
        let m = ModelParams::symmetric(p, j, 24).unwrap();
        let f = BoundaryField::unit(&m).unwrap();
        (m, f)
    }

    #[test]
    fn a_for_unit_field() {
        let (m, _) = unit(3, 1);
        let one = Padic::one(3, m.working_precision());
        let a = a_coeff(&one, &one, &one, &m).unwrap();
        assert_eq!(a, Padic::from_int(28, 3, a.precision()));
    }

    #[test]
    fn a_norms_for_unit_field() {
        for (p, j, e) in [(5u64, 1i64, -1i64), (7, 2, -2), (3, 1, 0), (3, 2, -1), (5, -1, -3)] {
            let (m, f) = unit(p, j);
            let a = level_factor(0, &f, &m).unwrap();
            assert_eq!(a.norm(), NormValue::Exponent(e), "p={p} J={j}");
        }
    }

    #[test]
    fn z_recursion_unit_field() {
        let (m, f) = unit(3, 1);
        let r = verify_z_recursion(1, &f, &m).unwrap();
        assert!(r.pass);
        assert_eq!(r.partition, Padic::from_int(56, 3, r.partition.precision()));
        let z2 = 28 * 28 * 56;
        assert_eq!(r.partition_next, Padic::from_int(z2, 3, r.partition_next.precision()));
        for n in 0..=2 {
            assert!(verify_z_recursion(n, &f, &m).unwrap().pass);
        }
        assert_eq!(verify_z_recursion(3, &f, &m).unwrap_err().name(), "DepthLimit");
    }

    #[test]
    fn level_factor_is_power_for_ti_fields() {
        let (m, f) = unit(5, 1);
        let a = level_factor(0, &f, &m).unwrap();
        assert_eq!(level_factor(2, &f, &m).unwrap(), a.pow(4));
    }

    #[test]
    fn inconsistent_field_is_reported() {
        let m = ModelParams::symmetric(5, 1, 24).unwrap();
        let f = BoundaryField::translation_invariant(FieldValue::rational(6, 1, &m).unwrap()).unwrap();
        assert_eq!(verify_z_recursion(1, &f, &m).unwrap_err().name(), "InconsistentField");
    }
}
