use num_rational::BigRational;

use super::field::{BoundaryField, FieldValue};
use super::scalar::{Arith, EvalMode, Scalar};
use super::spin::{hamiltonian, mask_interaction_sums, SpinConfig};
use super::tree::TreeLevels;
use super::{ModelError, ModelParams, Result};
use crate::padic::Padic;

/// Deepest tree for which configurations are enumerated exhaustively.
pub const MAX_PARTITION_DEPTH: u32 = 3;

/// A number system a boundary value can be read into.
pub(crate) trait FromField: Arith {
    fn pick(v: &FieldValue) -> Result<Self>;
}

impl FromField for Padic {
    fn pick(v: &FieldValue) -> Result<Self> {
        Ok(v.padic().clone())
    }
}

impl FromField for BigRational {
    fn pick(v: &FieldValue) -> Result<Self> {
        v.exact().cloned().ok_or(ModelError::ModeUnavailable)
    }
}

fn check_depth(n: u32) -> Result<()> {
    if n > MAX_PARTITION_DEPTH {
        return Err(ModelError::DepthLimit {
            depth: n,
            max: MAX_PARTITION_DEPTH,
        });
    }
    Ok(())
}

/// `∏_{x ∈ W_n} h_x^{φ(x)}` for every leaf pattern `φ`; bit `i` of the index
/// is the spin of leaf `2^n + i`.
fn leaf_table<S: FromField>(n: u32, field: &BoundaryField) -> Result<Vec<S>> {
    let tree = TreeLevels::new(n)?;
    let mut table: Vec<S> = Vec::with_capacity(1 << (1 << n));
    for (i, x) in tree.leaves().enumerate() {
        let h = S::pick(field.value_at(x)?)?;
        let h_inv = h.inv()?;
        if i == 0 {
            table.push(h_inv);
            table.push(h);
            continue;
        }
        let minus: Vec<S> = table.iter().map(|t| t.mul(&h_inv)).collect::<Result<_>>()?;
        let plus: Vec<S> = table.iter().map(|t| t.mul(&h)).collect::<Result<_>>()?;
        table = minus;
        table.extend(plus);
    }
    Ok(table)
}

/// Unnormalized weights of every configuration on `V_n`, indexed by mask.
pub(crate) fn all_weights<S: FromField>(n: u32, field: &BoundaryField, params: &ModelParams) -> Result<Vec<S>> {
    check_depth(n)?;
    let table = leaf_table::<S>(n, field)?;
    let vertices = (1u32 << (n + 1)) - 1;
    let internal = (1u32 << n) - 1;
    let p = params.prime();
    Ok((0..1u64 << vertices)
        .map(|mask| {
            let (e, s) = mask_interaction_sums(mask, n);
            let h = params.j1() * e + params.j2() * s;
            table[(mask >> internal) as usize].shift(p, h)
        })
        .collect())
}

pub(crate) fn all_weights_padic(n: u32, field: &BoundaryField, params: &ModelParams) -> Result<Vec<Padic>> {
    all_weights(n, field, params)
}

fn weight_in<S: FromField>(sigma: &SpinConfig, field: &BoundaryField, params: &ModelParams) -> Result<S> {
    let tree = TreeLevels::new(sigma.depth())?;
    let mut factors = Vec::with_capacity(1 << sigma.depth());
    for x in tree.leaves() {
        let h = S::pick(field.value_at(x)?)?;
        factors.push(if sigma.spin(x) > 0 { h } else { h.inv()? });
    }
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.mul(f)?;
    }
    Ok(acc.shift(params.prime(), hamiltonian(sigma, params)))
}

/// `p^{H_n(σ)} ∏_{x ∈ W_n} h_x^{σ(x)}`.
pub fn weight(sigma: &SpinConfig, field: &BoundaryField, params: &ModelParams) -> Result<Padic> {
    weight_in(sigma, field, params)
}

/// [`weight`] in exact rational arithmetic.
pub fn weight_exact(sigma: &SpinConfig, field: &BoundaryField, params: &ModelParams) -> Result<BigRational> {
    weight_in(sigma, field, params)
}

/// Every term of the partition sum at depth `n`, indexed by configuration mask.
pub fn partition_terms(n: u32, field: &BoundaryField, params: &ModelParams, mode: EvalMode) -> Result<Vec<Scalar>> {
    Ok(match mode {
        EvalMode::Padic => all_weights::<Padic>(n, field, params)?
            .into_iter()
            .map(Scalar::Padic)
            .collect(),
        EvalMode::ExactRational => all_weights::<BigRational>(n, field, params)?
            .into_iter()
            .map(Scalar::Rational)
            .collect(),
    })
}

fn partition_in<S: FromField>(n: u32, field: &BoundaryField, params: &ModelParams) -> Result<S> {
    S::sum(params.prime(), &all_weights::<S>(n, field, params)?)
}

/// `Z_{n,h}`: the sum of all weights on `V_n`, for `n ≤ 3`.
pub fn partition(n: u32, field: &BoundaryField, params: &ModelParams, mode: EvalMode) -> Result<Scalar> {
    Ok(match mode {
        EvalMode::Padic => partition_in::<Padic>(n, field, params)?.into_scalar(),
        EvalMode::ExactRational => partition_in::<BigRational>(n, field, params)?.into_scalar(),
    })
}

fn measure_in<S: FromField>(sigma: &SpinConfig, field: &BoundaryField, params: &ModelParams) -> Result<S> {
    let z = partition_in::<S>(sigma.depth(), field, params)?;
    if z.vanishes() {
        return Err(ModelError::DegeneratePartition);
    }
    weight_in::<S>(sigma, field, params)?.mul(&z.inv()?)
}

/// `μ_h^{(n)}(σ) = weight(σ) / Z_{n,h}`.
pub fn measure(sigma: &SpinConfig, field: &BoundaryField, params: &ModelParams, mode: EvalMode) -> Result<Scalar> {
    Ok(match mode {
        EvalMode::Padic => measure_in::<Padic>(sigma, field, params)?.into_scalar(),
        EvalMode::ExactRational => measure_in::<BigRational>(sigma, field, params)?.into_scalar(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::NormValue;
    use num_traits::One;

    fn setup(p: u64, j: i64) -> (ModelParams, BoundaryField) {
        let m = ModelParams::symmetric(p, j, 24).unwrap();
        let f = BoundaryField::unit(&m).unwrap();
        (m, f)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn weight_examples() {
        let (m, f) = setup(3, 1);
        let plus = SpinConfig::all_plus(1).unwrap();
        let star = SpinConfig::sibling_alternating(1).unwrap();
        assert_eq!(weight_exact(&plus, &f, &m).unwrap(), q(27, 1));
        assert_eq!(weight_exact(&star, &f, &m).unwrap(), q(1, 3));
        assert_eq!(weight(&star, &f, &m).unwrap().valuation(), Some(-1));

        let h = FieldValue::rational(2, 5, &m).unwrap();
        let g = BoundaryField::translation_invariant(h).unwrap();
        assert_eq!(weight_exact(&plus, &g, &m).unwrap(), q(27 * 4, 25));
    }

    #[test]
    fn partition_depth_one() {
        let (m, f) = setup(3, 1);
        let z = partition(1, &f, &m, EvalMode::ExactRational).unwrap();
        assert_eq!(z.as_rational().unwrap(), &q(56, 1));
        let zp = partition(1, &f, &m, EvalMode::Padic).unwrap();
        assert_eq!(
            zp.as_padic().unwrap(),
            &Padic::from_int(56, 3, zp.as_padic().unwrap().precision())
        );
    }

    #[test]
    fn partition_matches_two_root_spin_form() {
        // summing the leaves for each root spin gives S+ + S-
        for (p, j, hn, hd) in [(5u64, 1i64, 2i64, 3i64), (3, -1, 7, 2), (2, 2, 3, 1)] {
            let m = ModelParams::symmetric(p, j, 24).unwrap();
            let f = BoundaryField::translation_invariant(FieldValue::rational(hn, hd, &m).unwrap()).unwrap();
            let h2 = q(hn * hn, hd * hd);
            let two = BigRational::from_integer(2.into());
            let pj = |e: i64| Arith::shift(&BigRational::one(), p, e);
            let s_plus = pj(3 * j) * &h2 + pj(-j) * (&two + h2.recip());
            let s_minus = pj(-j) * (&h2 + &two) + pj(3 * j) * h2.recip();
            let z = partition(1, &f, &m, EvalMode::ExactRational).unwrap();
            assert_eq!(z.as_rational().unwrap(), &(s_plus + s_minus));
        }
        // for the solution h = 1 this is a (h + 1/h) with a = p^{3J} + 3 p^{-J}
        let (m, f) = setup(7, 1);
        let z = partition(1, &f, &m, EvalMode::ExactRational).unwrap();
        assert_eq!(z.as_rational().unwrap(), &(q(343 * 7 + 3, 7) * q(2, 1)));
    }

    #[test]
    fn measure_examples() {
        let (m, f) = setup(3, 1);
        let plus = SpinConfig::all_plus(1).unwrap();
        let star = SpinConfig::sibling_alternating(1).unwrap();
        let mu = measure(&plus, &f, &m, EvalMode::ExactRational).unwrap();
        assert_eq!(mu.as_rational().unwrap(), &q(27, 56));
        let mu = measure(&star, &f, &m, EvalMode::ExactRational).unwrap();
        assert_eq!(mu.as_rational().unwrap(), &q(1, 168));
        assert_eq!(mu.norm(3), NormValue::Exponent(-1));
        let mu = measure(&star, &f, &m, EvalMode::Padic).unwrap();
        assert_eq!(mu.norm(3), NormValue::Exponent(-1));
    }

    #[test]
    fn measures_sum_to_one() {
        let (m, f) = setup(5, -1);
        for n in 0..=2 {
            let z = partition_in::<BigRational>(n, &f, &m).unwrap();
            let w = all_weights::<BigRational>(n, &f, &m).unwrap();
            let total: BigRational = w.iter().map(|x| x / &z).sum();
            assert!(total.is_one());
        }
    }

    #[test]
    fn depth_and_mode_errors() {
        let (m, f) = setup(3, 1);
        assert_eq!(partition(4, &f, &m, EvalMode::Padic).unwrap_err().name(), "DepthLimit");
        let g = BoundaryField::translation_invariant(FieldValue::from_padic(Padic::one(3, 40))).unwrap();
        assert_eq!(
            partition(1, &g, &m, EvalMode::ExactRational).unwrap_err().name(),
            "ModeUnavailable"
        );
        assert!(partition(1, &g, &m, EvalMode::Padic).is_ok());
    }

    #[test]
    fn degenerate_partition() {
        // Z_0 = h + 1/h vanishes for h^2 = -1, which exists in Q_5
        let m = ModelParams::symmetric(5, 1, 24).unwrap();
        let i = Padic::from_int(-1, 5, m.working_precision()).sqrt().unwrap();
        let f = BoundaryField::translation_invariant(FieldValue::from_padic(i)).unwrap();
        let s = SpinConfig::all_plus(0).unwrap();
        assert_eq!(
            measure(&s, &f, &m, EvalMode::Padic).unwrap_err().name(),
            "DegeneratePartition"
        );
    }
}
