use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::{inverse_mod, pow_p, Padic, PadicError, Result};
use crate::residue;

/// Why a value has no square root in `Q_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SquareObstruction {
    OddValuation,
    /// Leading digit is a non-residue modulo an odd prime.
    NonResidue,
    /// p = 2 and the unit is not ≡ 1 (mod 8).
    TwoAdicObstruction,
}

impl fmt::Display for SquareObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SquareObstruction::OddValuation => "OddValuation",
            SquareObstruction::NonResidue => "NonResidue",
            SquareObstruction::TwoAdicObstruction => "TwoAdicObstruction",
        };
        f.write_str(s)
    }
}

impl Padic {
    /// The obstruction to a square root, or `None` when one exists.
    pub fn square_obstruction(&self) -> Result<Option<SquareObstruction>> {
        if self.is_zero() {
            return Err(PadicError::ZeroToPrecision);
        }
        if self.prime == 2 && self.relative_precision() < 3 {
            return Err(PadicError::InsufficientPrecision(format!(
                "2-adic square test needs 3 unit digits, have {}",
                self.relative_precision()
            )));
        }
        if self.valuation.rem_euclid(2) == 1 {
            return Ok(Some(SquareObstruction::OddValuation));
        }
        if self.prime == 2 {
            let low = (&self.unit % 8u32).to_u32().expect("below 8");
            return Ok((low != 1).then_some(SquareObstruction::TwoAdicObstruction));
        }
        let d0 = BigInt::from(&self.unit % self.prime);
        let qr = residue::euler_is_qr(&d0, self.prime).expect("odd prime and unit digit");
        Ok((!qr).then_some(SquareObstruction::NonResidue))
    }

    pub fn sqrt_exists(&self) -> Result<bool> {
        Ok(self.square_obstruction()?.is_none())
    }

    /// Square root on the canonical branch: for odd p the leading digit lies
    /// in `[1, (p-1)/2]`; for p = 2 the unit is `≡ 1 (mod 4)`.
    ///
    /// For odd p the relative precision is kept. For p = 2 one digit is lost,
    /// and the result's absolute precision says so.
    pub fn sqrt(&self) -> Result<Padic> {
        if let Some(why) = self.square_obstruction()? {
            return Err(PadicError::NotASquare(why));
        }
        let p = self.prime;
        let m = self.relative_precision();
        let half_v = self.valuation / 2;
        if p == 2 {
            let unit = two_adic_unit_sqrt(&self.unit, m);
            Ok(Padic::from_parts(2, half_v, unit, half_v + m - 1))
        } else {
            let d0 = BigInt::from(&self.unit % p);
            let r0 = residue::sqrt_mod(&d0, p).expect("residue checked above");
            let unit = hensel_lift(&self.unit, BigUint::from(r0.value()), p, m);
            Ok(Padic::from_parts(p, half_v, unit, half_v + m))
        }
    }
}

/// Newton iteration `r ← r - (r² - a)/(2r)`, doubling the digit count each step.
fn hensel_lift(a: &BigUint, mut r: BigUint, p: u64, digits: i64) -> BigUint {
    let mut k = 1;
    while k < digits {
        k = (2 * k).min(digits);
        let modulus = pow_p(p, k);
        let a_k = a % &modulus;
        let two_r = (&r << 1usize) % &modulus;
        let inv = inverse_mod(&two_r, &modulus).expect("2r is a unit for odd p");
        let r_sq = (&r * &r) % &modulus;
        // r - (r² - a) * inv, computed without leaving the non-negative residues
        let f = (&r_sq + &modulus - &a_k) % &modulus;
        let step = (f * inv) % &modulus;
        r = (&r + &modulus - step) % &modulus;
    }
    r
}

/// Bit-by-bit lift of a root of a unit `a ≡ 1 (mod 8)` known modulo `2^digits`.
/// The root is determined modulo `2^(digits-1)`.
fn two_adic_unit_sqrt(a: &BigUint, digits: i64) -> BigUint {
    let mut r = BigUint::one();
    // invariant: r² ≡ a (mod 2^k)
    for k in 3..digits {
        let modulus = pow_p(2, k + 1);
        let r_sq = (&r * &r) % &modulus;
        if r_sq != a % &modulus {
            r += BigUint::one() << (k - 1) as usize;
        }
    }
    let modulus = pow_p(2, digits - 1);
    r %= &modulus;
    if (&r % 4u32).to_u32() == Some(3) {
        r = &modulus - r;
    }
    debug_assert!(r.is_odd());
    r
}
