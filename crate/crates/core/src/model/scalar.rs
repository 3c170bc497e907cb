use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::{ModelError, Result};
use crate::padic::{NormValue, Padic, PadicError};

/// Arithmetic used to evaluate weights and partition functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    Padic,
    ExactRational,
}

/// A value produced in one of the [`EvalMode`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Padic(Padic),
    Rational(BigRational),
}

impl Scalar {
    pub fn as_padic(&self) -> Option<&Padic> {
        match self {
            Scalar::Padic(x) => Some(x),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Padic(_) => None,
        }
    }

    /// The value as a p-adic number; rationals are expanded to `precision`.
    pub fn to_padic(&self, prime: u64, precision: i64) -> Result<Padic> {
        match self {
            Scalar::Padic(x) => Ok(x.clone()),
            Scalar::Rational(r) => Ok(Padic::from_rational(
                r.numer().clone(),
                r.denom().clone(),
                prime,
                precision,
            )?),
        }
    }

    pub fn norm(&self, prime: u64) -> NormValue {
        match self {
            Scalar::Padic(x) => x.norm(),
            Scalar::Rational(r) => rational_norm(r, prime),
        }
    }
}

/// `|r|_p` of an exact rational.
pub(crate) fn rational_norm(r: &BigRational, p: u64) -> NormValue {
    if r.is_zero() {
        return NormValue::Zero;
    }
    NormValue::Exponent(valuation_of(r.numer(), p) - valuation_of(r.denom(), p))
}

fn valuation_of(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Padic(x) => x.fmt(f),
            Scalar::Rational(r) => r.fmt(f),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Padic(x) => x.serialize(s),
            Scalar::Rational(r) => s.serialize_str(&r.to_string()),
        }
    }
}

/// The operations the enumeration code needs from either number system.
pub(crate) trait Arith: Clone {
    fn mul(&self, other: &Self) -> Result<Self>;
    fn inv(&self) -> Result<Self>;
    /// Multiplication by `p^e`.
    fn shift(&self, p: u64, e: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn sum(p: u64, items: &[Self]) -> Result<Self>;
    fn into_scalar(self) -> Scalar;
}

impl Arith for Padic {
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Padic::mul(self, other)?)
    }

    fn inv(&self) -> Result<Self> {
        Ok(Padic::inv(self)?)
    }

    fn shift(&self, _p: u64, e: i64) -> Self {
        self.mul_pow_p(e)
    }

    fn vanishes(&self) -> bool {
        Padic::is_zero(self)
    }

    fn sum(p: u64, items: &[Self]) -> Result<Self> {
        Ok(Padic::sum(p, items)?)
    }

    fn into_scalar(self) -> Scalar {
        Scalar::Padic(self)
    }
}

impl Arith for BigRational {
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(ModelError::Padic(PadicError::DivisionByZeroToPrecision));
        }
        Ok(self.recip())
    }

    fn shift(&self, p: u64, e: i64) -> Self {
        let pe = BigRational::from_integer(BigInt::from(p).pow(e.unsigned_abs() as u32));
        if e >= 0 {
            self * pe
        } else {
            self / pe
        }
    }

    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn sum(_p: u64, items: &[Self]) -> Result<Self> {
        Ok(items.iter().fold(BigRational::zero(), |a, b| a + b))
    }

    fn into_scalar(self) -> Scalar {
        Scalar::Rational(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_norms() {
        let r = BigRational::new(27.into(), 56.into());
        assert_eq!(rational_norm(&r, 3), NormValue::Exponent(3));
        assert_eq!(rational_norm(&r, 2), NormValue::Exponent(-3));
        assert_eq!(rational_norm(&BigRational::zero(), 2), NormValue::Zero);
    }

    #[test]
    fn shifts_agree() {
        let r = BigRational::new(5.into(), 7.into());
        let x = Padic::from_rational(5, 7, 3, 20).unwrap();
        let rs = Arith::shift(&r, 3, -2);
        assert_eq!(Scalar::Rational(rs).to_padic(3, 18).unwrap(), Arith::shift(&x, 3, -2));
    }
}
