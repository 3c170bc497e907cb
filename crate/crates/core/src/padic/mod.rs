//! Truncated p-adic numbers in the absolute-precision model.
//!
//! A [`Padic`] is known modulo `p^K` where `K` is its absolute precision.
//! A nonzero value is stored as `p^v * u` with `u` a unit reduced modulo
//! `p^(K - v)`. A value whose known digits all vanish is *zero to precision*;
//! that is an ordinary state, not an error.
//!
//! Finite sums of values with a shared absolute precision are exact modulo
//! `p^K`, so summation order never changes a result.

mod series;
mod sqrt;

use std::cmp::min;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use sqrt::SquareObstruction;

/// Default number of digits kept beyond valuation 0.
pub const DEFAULT_PRECISION: i64 = 48;

/// Digits consumed by equality checks: a difference counts as zero when it
/// vanishes modulo `p^(K - GUARD_DIGITS)`.
pub const GUARD_DIGITS: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },
    #[error("division by a value that is zero to precision")]
    DivisionByZeroToPrecision,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("not a square: {0}")]
    NotASquare(SquareObstruction),
    #[error("argument outside the disc of convergence: {0}")]
    DomainError(String),
    #[error("argument is zero to precision")]
    ZeroToPrecision,
    #[error("invalid prime {0}")]
    InvalidPrime(u64),
    #[error("invalid p-adic record: {0}")]
    InvalidRecord(String),
}

impl PadicError {
    /// Variant name, used verbatim in CLI error payloads.
    pub fn name(&self) -> &'static str {
        match self {
            PadicError::ZeroDenominator => "ZeroDenominator",
            PadicError::PrimeMismatch { .. } => "PrimeMismatch",
            PadicError::DivisionByZeroToPrecision => "DivisionByZeroToPrecision",
            PadicError::InsufficientPrecision(_) => "InsufficientPrecision",
            PadicError::NotASquare(_) => "NotASquare",
            PadicError::DomainError(_) => "DomainError",
            PadicError::ZeroToPrecision => "ZeroToPrecision",
            PadicError::InvalidPrime(_) => "InvalidPrime",
            PadicError::InvalidRecord(_) => "InvalidRecord",
        }
    }
}

pub type Result<T> = std::result::Result<T, PadicError>;

/// `|x|_p` on a log scale: `Exponent(e)` means `p^(-e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormValue {
    Zero,
    Exponent(i64),
}

impl NormValue {
    /// Norm of a product.
    pub fn product(self, other: NormValue) -> NormValue {
        match (self, other) {
            (NormValue::Exponent(a), NormValue::Exponent(b)) => NormValue::Exponent(a + b),
            _ => NormValue::Zero,
        }
    }

    /// `log_p |x|_p`, i.e. the negated exponent. `None` for zero.
    pub fn log_norm(self) -> Option<i64> {
        match self {
            NormValue::Zero => None,
            NormValue::Exponent(e) => Some(-e),
        }
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormValue::Zero => write!(f, "0"),
            NormValue::Exponent(e) => write!(f, "p^{}", -e),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PadicRecord", try_from = "PadicRecord")]
pub struct Padic {
    prime: u64,
    /// Exponent of the leading digit; equals `precision` for zero.
    valuation: i64,
    /// Unit part modulo `p^(precision - valuation)`; zero iff the value is zero.
    unit: BigUint,
    precision: i64,
}

pub(crate) fn pow_p(p: u64, e: i64) -> BigUint {
    debug_assert!(e >= 0);
    BigUint::from(p).pow(e as u32)
}

/// Splits `n = p^k * rest` with `p ∤ rest`. `n` must be nonzero.
fn split_p_power(n: &BigUint, p: u64) -> (i64, BigUint) {
    let pb = BigUint::from(p);
    let mut k = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return (k, rest);
        }
        rest = q;
        k += 1;
    }
}

/// Inverse of a unit modulo `modulus`.
pub(crate) fn inverse_mod(unit: &BigUint, modulus: &BigUint) -> Option<BigUint> {
    if modulus.is_one() {
        return Some(BigUint::zero());
    }
    let a = BigInt::from(unit.clone());
    let m = BigInt::from(modulus.clone());
    let egcd = a.extended_gcd(&m);
    if !egcd.gcd.is_one() {
        return None;
    }
    egcd.x.mod_floor(&m).to_biguint()
}

fn check_prime(p: u64) -> Result<()> {
    if !crate::primes::is_prime(p) {
        Err(PadicError::InvalidPrime(p))
    } else {
        Ok(())
    }
}

impl Padic {
    pub fn zero(prime: u64, precision: i64) -> Self {
        Padic {
            prime,
            valuation: precision,
            unit: BigUint::zero(),
            precision,
        }
    }

    pub fn one(prime: u64, precision: i64) -> Self {
        Self::from_parts(prime, 0, BigUint::one(), precision)
    }

    /// Exact power `p^e`, known to absolute precision `precision`.
    pub fn power_of_p(prime: u64, e: i64, precision: i64) -> Self {
        Self::from_parts(prime, e, BigUint::one(), precision)
    }

    /// Builds `p^valuation * unit` truncated to `precision`; factors of `p`
    /// in `unit` are moved into the valuation.
    pub(crate) fn from_parts(prime: u64, valuation: i64, unit: BigUint, precision: i64) -> Self {
        if unit.is_zero() || valuation >= precision {
            return Self::zero(prime, precision);
        }
        let (k, unit) = split_p_power(&unit, prime);
        let valuation = valuation + k;
        if valuation >= precision {
            return Self::zero(prime, precision);
        }
        let unit = unit % pow_p(prime, precision - valuation);
        Padic {
            prime,
            valuation,
            unit,
            precision,
        }
    }

    pub fn from_int(n: impl Into<BigInt>, prime: u64, precision: i64) -> Self {
        let n: BigInt = n.into();
        let (sign, mag) = n.into_parts();
        let x = Self::from_parts(prime, 0, mag, precision);
        if sign == Sign::Minus {
            x.neg()
        } else {
            x
        }
    }

    /// Canonical expansion of `num/den` truncated to absolute precision `precision`.
    pub fn from_rational(num: impl Into<BigInt>, den: impl Into<BigInt>, prime: u64, precision: i64) -> Result<Self> {
        check_prime(prime)?;
        let num: BigInt = num.into();
        let den: BigInt = den.into();
        if den.is_zero() {
            return Err(PadicError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero(prime, precision));
        }
        let negative = num.is_negative() != den.is_negative();
        let (vn, un) = split_p_power(num.magnitude(), prime);
        let (vd, ud) = split_p_power(den.magnitude(), prime);
        let valuation = vn - vd;
        if valuation >= precision {
            return Ok(Self::zero(prime, precision));
        }
        let modulus = pow_p(prime, precision - valuation);
        let inv = inverse_mod(&(ud % &modulus), &modulus).expect("p-free denominator is a unit");
        let x = Padic {
            prime,
            valuation,
            unit: (un * inv) % &modulus,
            precision,
        };
        Ok(if negative { x.neg() } else { x })
    }

    /// Builds a value from little-endian base-`p` unit digits.
    pub fn from_digits(prime: u64, valuation: i64, digits: &[u64], precision: i64) -> Result<Self> {
        check_prime(prime)?;
        if digits.iter().any(|&d| d >= prime) {
            return Err(PadicError::InvalidRecord("digit out of range".into()));
        }
        let pb = BigUint::from(prime);
        let unit = digits.iter().rev().fold(BigUint::zero(), |acc, &d| acc * &pb + d);
        Ok(Self::from_parts(prime, valuation, unit, precision))
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// Valuation, or `None` when zero to precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.valuation)
    }

    /// Largest `e` such that the value is known to be `≡ 0 (mod p^e)`.
    pub fn vanishing_order(&self) -> i64 {
        self.valuation
    }

    /// Number of known unit digits (0 for zero).
    pub fn relative_precision(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.precision - self.valuation
        }
    }

    pub fn unit(&self) -> &BigUint {
        &self.unit
    }

    pub fn norm(&self) -> NormValue {
        if self.is_zero() {
            NormValue::Zero
        } else {
            NormValue::Exponent(self.valuation)
        }
    }

    /// Little-endian base-`p` digits of the unit, exactly
    /// `precision - valuation` of them (empty for zero).
    pub fn digits(&self) -> Vec<u64> {
        let m = self.relative_precision() as usize;
        let mut out = Vec::with_capacity(m);
        if self.prime <= 256 {
            out = self
                .unit
                .to_radix_le(self.prime as u32)
                .into_iter()
                .map(u64::from)
                .collect();
            if self.unit.is_zero() {
                out.clear();
            }
        } else {
            let pb = BigUint::from(self.prime);
            let mut rest = self.unit.clone();
            while !rest.is_zero() {
                let (q, r) = rest.div_rem(&pb);
                out.push(r.to_u64().unwrap_or(0));
                rest = q;
            }
        }
        out.resize(m, 0);
        out
    }

    /// The value as a rational `p^v * unit` (exact representative of the class).
    pub fn to_rational(&self) -> num_rational::BigRational {
        use num_rational::BigRational;
        if self.is_zero() {
            return BigRational::zero();
        }
        let u = BigInt::from(self.unit.clone());
        let pe = BigInt::from(pow_p(self.prime, self.valuation.abs()));
        if self.valuation >= 0 {
            BigRational::from_integer(u * pe)
        } else {
            BigRational::new(u, pe)
        }
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.prime == other.prime {
            Ok(())
        } else {
            Err(PadicError::PrimeMismatch {
                left: self.prime,
                right: other.prime,
            })
        }
    }

    /// Forgets digits at and beyond `p^precision`. Never raises precision.
    pub fn truncate(&self, precision: i64) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        Self::from_parts(self.prime, self.valuation, self.unit.clone(), precision)
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let modulus = pow_p(self.prime, self.precision - self.valuation);
        Padic {
            unit: modulus - &self.unit,
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let k = min(self.precision, other.precision);
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ok(Self::zero(self.prime, k)),
            (true, false) => Ok(other.truncate(k)),
            (false, true) => Ok(self.truncate(k)),
            (false, false) => {
                let v0 = min(self.valuation, other.valuation);
                if v0 >= k {
                    return Ok(Self::zero(self.prime, k));
                }
                let a = &self.unit * pow_p(self.prime, self.valuation - v0);
                let b = &other.unit * pow_p(self.prime, other.valuation - v0);
                let s = (a + b) % pow_p(self.prime, k - v0);
                Ok(Self::from_parts(self.prime, v0, s, k))
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Sum of many terms with one reduction at the end.
    pub fn sum<'a, I>(prime: u64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Padic>,
    {
        let terms: Vec<&Padic> = terms.into_iter().collect();
        let Some(k) = terms.iter().map(|t| t.precision).min() else {
            return Err(PadicError::InsufficientPrecision("empty sum has no precision".into()));
        };
        if let Some(t) = terms.iter().find(|t| t.prime != prime) {
            return Err(PadicError::PrimeMismatch {
                left: prime,
                right: t.prime,
            });
        }
        let v0 = terms.iter().filter(|t| !t.is_zero()).map(|t| t.valuation).min();
        let Some(v0) = v0.filter(|&v| v < k) else {
            return Ok(Self::zero(prime, k));
        };
        let modulus = pow_p(prime, k - v0);
        let mut acc = BigUint::zero();
        for t in terms.iter().filter(|t| !t.is_zero() && t.valuation < k) {
            acc += &t.unit * pow_p(prime, t.valuation - v0);
        }
        Ok(Self::from_parts(prime, v0, acc % modulus, k))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let p = self.prime;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ok(Self::zero(p, self.precision + other.precision)),
            (true, false) => Ok(Self::zero(p, self.precision + other.valuation)),
            (false, true) => Ok(Self::zero(p, other.precision + self.valuation)),
            (false, false) => {
                let m = min(self.relative_precision(), other.relative_precision());
                let v = self.valuation + other.valuation;
                let unit = (&self.unit * &other.unit) % pow_p(p, m);
                Ok(Padic {
                    prime: p,
                    valuation: v,
                    unit,
                    precision: v + m,
                })
            }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(PadicError::DivisionByZeroToPrecision);
        }
        let m = self.relative_precision();
        let unit = inverse_mod(&self.unit, &pow_p(self.prime, m)).expect("unit is invertible");
        Ok(Padic {
            prime: self.prime,
            valuation: -self.valuation,
            unit,
            precision: m - self.valuation,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// Multiplication by the exact power `p^e`: a pure shift.
    pub fn mul_pow_p(&self, e: i64) -> Self {
        Padic {
            prime: self.prime,
            valuation: self.valuation + e,
            unit: self.unit.clone(),
            precision: self.precision + e,
        }
    }

    /// Multiplication by an exact integer.
    pub fn mul_int(&self, n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        if n.is_zero() {
            return Self::zero(self.prime, self.precision);
        }
        let (k, rest) = split_p_power(n.magnitude(), self.prime);
        let shifted = self.mul_pow_p(k);
        if shifted.is_zero() {
            return shifted;
        }
        let modulus = pow_p(self.prime, shifted.relative_precision());
        let y = Padic {
            unit: (&shifted.unit * rest) % modulus,
            ..shifted
        };
        if n.is_negative() {
            y.neg()
        } else {
            y
        }
    }

    /// Division by an exact nonzero integer.
    pub fn div_int(&self, n: impl Into<BigInt>) -> Result<Self> {
        let n: BigInt = n.into();
        if n.is_zero() {
            return Err(PadicError::DivisionByZeroToPrecision);
        }
        let (k, rest) = split_p_power(n.magnitude(), self.prime);
        let shifted = self.mul_pow_p(-k);
        if shifted.is_zero() {
            return Ok(shifted);
        }
        let modulus = pow_p(self.prime, shifted.relative_precision());
        let inv = inverse_mod(&(rest % &modulus), &modulus).expect("p-free integer is a unit");
        let y = Padic {
            unit: (&shifted.unit * inv) % modulus,
            ..shifted
        };
        Ok(if n.is_negative() { y.neg() } else { y })
    }

    /// `self^e`; the empty product is reported at the input's precision.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Padic> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base).expect("same prime"),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same prime");
            }
        }
        acc.unwrap_or_else(|| Self::one(self.prime, self.precision))
    }

    /// `true` when `self - other` vanishes modulo `p^threshold`.
    pub fn agrees_with(&self, other: &Self, threshold: i64) -> Result<bool> {
        Ok(self.sub(other)?.vanishing_order() >= threshold)
    }
}

impl fmt::Debug for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Padic({self})")
    }
}

impl fmt::Display for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "O({}^{})", self.prime, self.precision);
        }
        let digits: Vec<String> = self.digits().iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "{}^{}·[{}] + O({}^{})",
            self.prime,
            self.valuation,
            digits.join(","),
            self.prime,
            self.precision
        )
    }
}

/// Wire form used in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicRecord {
    pub prime: u64,
    /// `null` when zero to precision.
    pub valuation: Option<i64>,
    /// Little-endian base-p digits of the unit.
    pub digits: Vec<u64>,
    pub abs_precision: i64,
    pub zero_flag: bool,
}

impl From<Padic> for PadicRecord {
    fn from(x: Padic) -> Self {
        PadicRecord {
            prime: x.prime,
            valuation: x.valuation(),
            digits: x.digits(),
            abs_precision: x.precision,
            zero_flag: x.is_zero(),
        }
    }
}

impl TryFrom<PadicRecord> for Padic {
    type Error = PadicError;

    fn try_from(r: PadicRecord) -> Result<Self> {
        check_prime(r.prime)?;
        match (r.zero_flag, r.valuation) {
            (true, None) if r.digits.is_empty() => Ok(Padic::zero(r.prime, r.abs_precision)),
            (false, Some(v)) => {
                if v >= r.abs_precision || r.digits.len() as i64 != r.abs_precision - v {
                    return Err(PadicError::InvalidRecord(
                        "digit count must equal abs_precision - valuation".into(),
                    ));
                }
                if r.digits[0] == 0 {
                    return Err(PadicError::InvalidRecord("leading digit must be nonzero".into()));
                }
                Padic::from_digits(r.prime, v, &r.digits, r.abs_precision)
            }
            _ => Err(PadicError::InvalidRecord(
                "zero_flag, valuation and digits disagree".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64, p: u64, k: i64) -> Padic {
        Padic::from_rational(n, d, p, k).unwrap()
    }

    #[test]
    fn from_rational_examples() {
        let one = q(1, 1, 5, 4);
        assert_eq!(one.valuation(), Some(0));
        assert_eq!(one.digits(), vec![1, 0, 0, 0]);

        assert_eq!(q(-1, 1, 5, 4).digits(), vec![4, 4, 4, 4]);

        // 3 * 17 = 51 ≡ 1 (mod 25)
        let third = q(1, 3, 5, 2);
        assert_eq!(third.digits(), vec![2, 3]);
        assert_eq!((BigUint::from(3u32) * third.unit()) % 25u32, BigUint::one());

        let ten = q(10, 1, 5, 4);
        assert_eq!(ten.valuation(), Some(1));
        assert_eq!(ten.digits()[0], 2);
        assert_eq!(ten.digits().len(), 3);
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(Padic::from_rational(1, 0, 5, 4), Err(PadicError::ZeroDenominator));
    }

    #[test]
    fn add_examples() {
        let s = q(5, 1, 5, 10).add(&q(1, 1, 5, 10)).unwrap();
        assert_eq!(s.norm(), NormValue::Exponent(0));
        assert!(q(1, 1, 5, 10).add(&q(-1, 1, 5, 10)).unwrap().is_zero());
        let s = q(1, 3, 5, 10).add(&q(2, 3, 5, 10)).unwrap();
        assert_eq!(s, Padic::one(5, 10));
    }

    #[test]
    fn add_takes_min_precision() {
        let s = q(1, 7, 3, 5).add(&q(2, 7, 3, 9)).unwrap();
        assert_eq!(s.precision(), 5);
        assert_eq!(s, q(3, 7, 3, 5));
    }

    #[test]
    fn prime_mismatch() {
        let e = q(1, 1, 5, 4).add(&q(1, 1, 3, 4)).unwrap_err();
        assert_eq!(e.name(), "PrimeMismatch");
    }

    #[test]
    fn mul_and_inv_examples() {
        let five = q(5, 1, 5, 10);
        assert_eq!(five.mul(&five.inv().unwrap()).unwrap(), Padic::one(5, 9));
        assert_eq!(q(3, 1, 5, 2).inv().unwrap().digits(), vec![2, 3]);
        assert_eq!(q(3, 1, 5, 2).inv().unwrap(), q(1, 3, 5, 2));

        let theta = Padic::power_of_p(3, -2, 48);
        let sq = theta.mul(&theta).unwrap();
        assert_eq!(sq.valuation(), Some(-4));
        assert_eq!(sq.norm(), NormValue::Exponent(-4));
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(Padic::zero(7, 5).inv(), Err(PadicError::DivisionByZeroToPrecision));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(Padic::zero(3, 10).norm(), NormValue::Zero);
        assert_eq!(q(56, 1, 3, 10).norm(), NormValue::Exponent(0));
        // p^{4J} + 3 for J = -1
        for p in [2u64, 3, 5, 7] {
            let x = Padic::power_of_p(p, -4, 20).add(&q(3, 1, p, 20)).unwrap();
            assert_eq!(x.norm(), NormValue::Exponent(-4));
        }
    }

    #[test]
    fn int_scaling() {
        let x = q(7, 4, 3, 12);
        assert_eq!(x.mul_int(6).div_int(6).unwrap().truncate(11), x.truncate(11));
        assert_eq!(x.div_int(-9).unwrap(), q(-7, 36, 3, 10));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let x = q(-2, 3, 7, 20);
        assert_eq!(x.pow(3), x.mul(&x).unwrap().mul(&x).unwrap());
    }

    #[test]
    fn sum_matches_pairwise_add() {
        let xs: Vec<Padic> = (1..20)
            .map(|i| q(i * i - 40, 2 * i + 1, 3, 15).mul_pow_p(i % 4 - 2))
            .collect();
        let folded = xs.iter().skip(1).fold(xs[0].clone(), |acc, x| acc.add(x).unwrap());
        assert_eq!(Padic::sum(3, &xs).unwrap(), folded);
    }

    #[test]
    fn record_round_trip() {
        for x in [q(-17, 12, 5, 9), Padic::zero(3, 7), q(1, 1, 1009, 3)] {
            let json = serde_json::to_string(&x).unwrap();
            let back: Padic = serde_json::from_str(&json).unwrap();
            assert_eq!(back, x);
            assert_eq!(serde_json::to_string(&back).unwrap(), json);
        }
    }

    #[test]
    fn record_shape() {
        let json = serde_json::to_value(q(10, 1, 5, 3)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"prime": 5, "valuation": 1, "digits": [2, 0], "abs_precision": 3, "zero_flag": false})
        );
    }

    #[test]
    fn malformed_records_rejected() {
        let bad = r#"{"prime":5,"valuation":0,"digits":[0,1],"abs_precision":2,"zero_flag":false}"#;
        assert!(serde_json::from_str::<Padic>(bad).is_err());
        let bad = r#"{"prime":5,"valuation":0,"digits":[1],"abs_precision":2,"zero_flag":false}"#;
        assert!(serde_json::from_str::<Padic>(bad).is_err());
    }
}
