use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::tree::level_of;
use super::{ModelError, ModelParams, Result};
use crate::padic::Padic;

/// One boundary value `h_x`, with its exact rational form when it has one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldValue {
    padic: Padic,
    #[serde(serialize_with = "serialize_exact")]
    exact: Option<BigRational>,
}

fn serialize_exact<S: Serializer>(v: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl FieldValue {
    /// A value with no known rational form.
    pub fn from_padic(padic: Padic) -> Self {
        FieldValue { padic, exact: None }
    }

    /// `num / den` at the working precision of `params`.
    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>, params: &ModelParams) -> Result<Self> {
        let num: BigInt = num.into();
        let den: BigInt = den.into();
        if den.is_zero() {
            return Err(crate::padic::PadicError::ZeroDenominator.into());
        }
        Self::from_exact(BigRational::new(num, den), params)
    }

    pub fn from_exact(r: BigRational, params: &ModelParams) -> Result<Self> {
        let padic = Padic::from_rational(
            r.numer().clone(),
            r.denom().clone(),
            params.prime(),
            params.working_precision(),
        )?;
        Ok(FieldValue { padic, exact: Some(r) })
    }

    pub fn padic(&self) -> &Padic {
        &self.padic
    }

    pub fn exact(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    pub fn negated(&self) -> Self {
        FieldValue {
            padic: self.padic.neg(),
            exact: self.exact.as_ref().map(|r| -r),
        }
    }
}

/// Shape of a boundary field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldKind {
    /// `h_x = h` everywhere.
    TranslationInvariant { h: FieldValue },
    /// `h_x` depends on the parity of the level of `x`.
    TwoPeriodicByLevel { even: FieldValue, odd: FieldValue },
    /// Arbitrary values on finitely many vertices.
    Explicit { values: BTreeMap<u64, FieldValue> },
}

/// An invertible boundary field `x ↦ h_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BoundaryField {
    kind: FieldKind,
}

fn check_invertible(v: &FieldValue, at: u64) -> Result<()> {
    if v.padic.is_zero() {
        Err(ModelError::NonInvertibleField(at))
    } else {
        Ok(())
    }
}

impl BoundaryField {
    pub fn translation_invariant(h: FieldValue) -> Result<Self> {
        check_invertible(&h, 1)?;
        Ok(BoundaryField {
            kind: FieldKind::TranslationInvariant { h },
        })
    }

    pub fn two_periodic(even: FieldValue, odd: FieldValue) -> Result<Self> {
        check_invertible(&even, 1)?;
        check_invertible(&odd, 2)?;
        if even.padic.prime() != odd.padic.prime() {
            return Err(crate::padic::PadicError::PrimeMismatch {
                left: even.padic.prime(),
                right: odd.padic.prime(),
            }
            .into());
        }
        Ok(BoundaryField {
            kind: FieldKind::TwoPeriodicByLevel { even, odd },
        })
    }

    pub fn explicit(values: BTreeMap<u64, FieldValue>) -> Result<Self> {
        let mut primes = values.values().map(|v| v.padic.prime());
        if let Some(p) = primes.next() {
            if let Some(q) = primes.find(|&q| q != p) {
                return Err(crate::padic::PadicError::PrimeMismatch { left: p, right: q }.into());
            }
        }
        for (&x, v) in &values {
            if x == 0 {
                return Err(ModelError::FieldUnresolved(0));
            }
            check_invertible(v, x)?;
        }
        Ok(BoundaryField {
            kind: FieldKind::Explicit { values },
        })
    }

    /// The field `h ≡ 1`.
    pub fn unit(params: &ModelParams) -> Result<Self> {
        Self::translation_invariant(FieldValue::rational(1, 1, params)?)
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn value_at(&self, x: u64) -> Result<&FieldValue> {
        match &self.kind {
            FieldKind::TranslationInvariant { h } => Ok(h),
            FieldKind::TwoPeriodicByLevel { even, odd } => Ok(if level_of(x).is_multiple_of(2) { even } else { odd }),
            FieldKind::Explicit { values } => values.get(&x).ok_or(ModelError::FieldUnresolved(x)),
        }
    }

    /// `x ↦ -h_x`.
    pub fn negated(&self) -> Self {
        let kind = match &self.kind {
            FieldKind::TranslationInvariant { h } => FieldKind::TranslationInvariant { h: h.negated() },
            FieldKind::TwoPeriodicByLevel { even, odd } => FieldKind::TwoPeriodicByLevel {
                even: even.negated(),
                odd: odd.negated(),
            },
            FieldKind::Explicit { values } => FieldKind::Explicit {
                values: values.iter().map(|(&x, v)| (x, v.negated())).collect(),
            },
        };
        BoundaryField { kind }
    }

    /// Every value carries an exact rational form.
    pub fn is_rational(&self) -> bool {
        self.values().all(|v| v.exact.is_some())
    }

    /// `true` when `h_x` depends only on the level of `x`.
    pub fn is_level_uniform(&self) -> bool {
        !matches!(self.kind, FieldKind::Explicit { .. })
    }

    fn values(&self) -> Box<dyn Iterator<Item = &FieldValue> + '_> {
        match &self.kind {
            FieldKind::TranslationInvariant { h } => Box::new(std::iter::once(h)),
            FieldKind::TwoPeriodicByLevel { even, odd } => Box::new([even, odd].into_iter()),
            FieldKind::Explicit { values } => Box::new(values.values()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ModelParams {
        ModelParams::symmetric(5, 1, 20).unwrap()
    }

    #[test]
    fn resolution_by_kind() {
        let m = params();
        let a = FieldValue::rational(2, 1, &m).unwrap();
        let b = FieldValue::rational(3, 7, &m).unwrap();
        let f = BoundaryField::two_periodic(a.clone(), b.clone()).unwrap();
        assert_eq!(f.value_at(1).unwrap(), &a);
        assert_eq!(f.value_at(3).unwrap(), &b);
        assert_eq!(f.value_at(6).unwrap(), &a);
        assert!(f.is_rational());
        let e = BoundaryField::explicit([(4, a.clone())].into()).unwrap();
        assert_eq!(e.value_at(5).unwrap_err().name(), "FieldUnresolved");
    }

    #[test]
    fn rejects_zero_values() {
        let m = params();
        let z = FieldValue::rational(0, 1, &m).unwrap();
        assert_eq!(
            BoundaryField::translation_invariant(z).unwrap_err().name(),
            "NonInvertibleField"
        );
    }

    #[test]
    fn negation_and_rationality() {
        let m = params();
        let h = FieldValue::rational(3, 2, &m).unwrap();
        let f = BoundaryField::translation_invariant(h).unwrap().negated();
        let v = f.value_at(9).unwrap();
        assert_eq!(v.exact().unwrap(), &BigRational::new((-3).into(), 2.into()));
        assert_eq!(
            v.padic(),
            &Padic::from_rational(-3, 2, 5, m.working_precision()).unwrap()
        );
        let irr = BoundaryField::translation_invariant(FieldValue::from_padic(Padic::one(5, 10))).unwrap();
        assert!(!irr.is_rational());
    }
}
