use serde::Serialize;

use super::field::BoundaryField;
use super::partition::{all_weights_padic, MAX_PARTITION_DEPTH};
use super::spin::SpinConfig;
use super::tree::TreeLevels;
use super::{ModelError, ModelParams, Result};
use crate::padic::Padic;

/// Outcome of checking that the level-`n` measure marginalizes to level `n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub depth: u32,
    pub pass: bool,
    /// Required vanishing order of every mismatch.
    pub threshold: i64,
    /// Smallest vanishing order among all mismatches, i.e. the largest mismatch norm.
    pub worst_order: i64,
    /// Configuration on `V_(n-1)` attaining `worst_order`.
    pub worst_offender: String,
    pub configurations: usize,
}

/// Checks `Σ_φ μ^{(n)}(σ ∨ φ) = μ^{(n-1)}(σ)` for every `σ` on `V_(n-1)`.
pub fn check_consistency(n: u32, field: &BoundaryField, params: &ModelParams) -> Result<ConsistencyReport> {
    if !(1..=MAX_PARTITION_DEPTH).contains(&n) {
        return Err(ModelError::DepthLimit {
            depth: n,
            max: MAX_PARTITION_DEPTH,
        });
    }
    let p = params.prime();
    let fine = all_weights_padic(n, field, params)?;
    let coarse = all_weights_padic(n - 1, field, params)?;
    let z_fine = Padic::sum(p, &fine)?;
    let z_coarse = Padic::sum(p, &coarse)?;
    if z_fine.is_zero() || z_coarse.is_zero() {
        return Err(ModelError::DegeneratePartition);
    }
    let z_fine_inv = z_fine.inv()?;
    let z_coarse_inv = z_coarse.inv()?;
    let inner_bits = (1u32 << n) - 1;
    let leaf_patterns = 1u64 << (1u32 << n);
    let mut worst: Option<(i64, u64)> = None;
    for (sigma, w) in coarse.iter().enumerate() {
        let sigma = sigma as u64;
        let block: Vec<&Padic> = (0..leaf_patterns)
            .map(|phi| &fine[(sigma | (phi << inner_bits)) as usize])
            .collect();
        let lhs = Padic::sum(p, block)?.mul(&z_fine_inv)?;
        let rhs = w.mul(&z_coarse_inv)?;
        let order = lhs.sub(&rhs)?.vanishing_order();
        if worst.is_none_or(|(o, _)| order < o) {
            worst = Some((order, sigma));
        }
    }
    let (worst_order, offender) = worst.expect("at least one configuration");
    let threshold = params.guard_threshold();
    Ok(ConsistencyReport {
        depth: n,
        pass: worst_order >= threshold,
        threshold,
        worst_order,
        worst_offender: SpinConfig::from_mask(n - 1, offender)?.to_string(),
        configurations: coarse.len(),
    })
}

/// `u_x = (θ² u_y u_z + u_y + u_z + 1) / (u_y u_z + u_y + u_z + θ²)`.
pub fn recurrence(u_y: &Padic, u_z: &Padic, params: &ModelParams) -> Result<Padic> {
    let j = params.coupling()?;
    let p = params.prime();
    let k = params.working_precision();
    let one = Padic::one(p, k);
    let theta2 = Padic::power_of_p(p, 4 * j, k);
    let yz = u_y.mul(u_z)?;
    let s = u_y.add(u_z)?;
    let num = Padic::sum(p, [&yz.mul_pow_p(4 * j), &s, &one])?;
    let den = Padic::sum(p, [&yz, &s, &theta2])?;
    if den.is_zero() {
        return Err(ModelError::DenominatorZeroToPrecision);
    }
    Ok(num.div(&den)?)
}

/// Smallest vanishing order of `h_x² - f(h_y², h_z²)` over the internal
/// vertices of `V_n`.
pub fn compatibility_residual(field: &BoundaryField, n: u32, params: &ModelParams) -> Result<i64> {
    let tree = TreeLevels::new(n)?;
    let vertices: Vec<u64> = if field.is_level_uniform() {
        (0..n).map(|m| 1u64 << m).collect()
    } else {
        tree.internal().collect()
    };
    let mut worst = i64::MAX;
    for x in vertices {
        let [y, z] = tree.successors(x).expect("internal vertex");
        let sq = |v: u64| -> Result<Padic> {
            let h = field.value_at(v)?.padic();
            Ok(h.mul(h)?)
        };
        let f = recurrence(&sq(y)?, &sq(z)?, params)?;
        worst = worst.min(sq(x)?.sub(&f)?.vanishing_order());
    }
    Ok(worst)
}

/// `true` iff `u_x = h_x²` satisfies the recurrence at every internal vertex
/// of `V_n` to guard precision.
pub fn field_compatible(field: &BoundaryField, n: u32, params: &ModelParams) -> Result<bool> {
    Ok(compatibility_residual(field, n, params)? >= params.guard_threshold())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::FieldValue;

    #[test]
    fn unit_field_is_consistent() {
        for (p, j) in [(2u64, 1i64), (3, 1), (5, -1), (7, 2)] {
            let m = ModelParams::symmetric(p, j, 24).unwrap();
            let f = BoundaryField::unit(&m).unwrap();
            assert!(field_compatible(&f, 3, &m).unwrap());
            for n in 1..=2 {
                let r = check_consistency(n, &f, &m).unwrap();
                assert!(r.pass, "p={p} J={j} n={n}: {r:?}");
            }
        }
    }

    #[test]
    fn non_solution_fails() {
        let m = ModelParams::symmetric(5, 1, 24).unwrap();
        let f = BoundaryField::translation_invariant(FieldValue::rational(6, 1, &m).unwrap()).unwrap();
        assert!(!field_compatible(&f, 2, &m).unwrap());
        let r = check_consistency(2, &f, &m).unwrap();
        assert!(!r.pass);
        assert!(r.worst_order < r.threshold);
        assert_eq!(r.configurations, 8);
    }

    #[test]
    fn recurrence_fixes_one() {
        let m = ModelParams::symmetric(3, 2, 20).unwrap();
        let one = Padic::one(3, m.working_precision());
        assert!(recurrence(&one, &one, &m)
            .unwrap()
            .agrees_with(&one, m.guard_threshold())
            .unwrap());
    }

    #[test]
    fn recurrence_denominator_zero() {
        // u = -1 + sqrt(1 - θ²) solves u² + 2u + θ² = 0
        let m = ModelParams::symmetric(5, 1, 20).unwrap();
        let k = m.working_precision();
        let radicand = Padic::one(5, k).sub(&Padic::power_of_p(5, 4, k)).unwrap();
        let u = radicand.sqrt().unwrap().sub(&Padic::one(5, k)).unwrap();
        assert_eq!(recurrence(&u, &u, &m).unwrap_err().name(), "DenominatorZeroToPrecision");
    }

    #[test]
    fn depth_bounds() {
        let m = ModelParams::symmetric(3, 1, 20).unwrap();
        let f = BoundaryField::unit(&m).unwrap();
        assert_eq!(check_consistency(0, &f, &m).unwrap_err().name(), "DepthLimit");
        assert_eq!(check_consistency(4, &f, &m).unwrap_err().name(), "DepthLimit");
    }
}
