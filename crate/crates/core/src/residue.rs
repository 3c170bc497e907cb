//! Congruence-level existence tests.
//!
//! Everything here works on residues modulo a prime and never builds a
//! p-adic number, so it can cross-check the constructive solvers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("modulus {0} is not an odd prime")]
    InvalidModulus(u64),
    #[error("{a} is divisible by {p}")]
    ZeroResidue { a: BigInt, p: u64 },
    #[error("{a} is not a quadratic residue modulo {p}")]
    NonResidue { a: BigInt, p: u64 },
    #[error("coupling J must be nonzero")]
    ZeroCoupling,
}

impl ResidueError {
    pub fn name(&self) -> &'static str {
        match self {
            ResidueError::InvalidModulus(_) => "InvalidModulus",
            ResidueError::ZeroResidue { .. } => "ZeroResidue",
            ResidueError::NonResidue { .. } => "NonResidue",
            ResidueError::ZeroCoupling => "ZeroCoupling",
        }
    }
}

pub type Result<T> = std::result::Result<T, ResidueError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Residue {
    modulus: u64,
    value: u64,
}

impl Residue {
    pub fn new(value: impl Into<BigInt>, modulus: u64) -> Self {
        let v = reduce(&value.into(), modulus);
        Residue {
            modulus,
            value: v.to_u64().expect("reduced below modulus"),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictReason {
    /// p ∈ {2, 3, 5} for the translation-invariant count, p ∈ {2, 3} or p = 2 for periods.
    SmallPrime,
    /// J < 0: the three translation-invariant solutions always exist.
    NegativeCoupling,
    /// The discriminant's residue is not a square.
    NonResidueDiscriminant,
    /// The discriminant is a square but the root's residue is not.
    NonResidueRoot,
    /// Every congruence in the chain is solvable.
    CongruenceSolvable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceVerdict {
    pub count: u8,
    pub reason: VerdictReason,
    pub witnesses: Vec<Residue>,
}

fn reduce(a: &BigInt, p: u64) -> BigUint {
    a.mod_floor(&BigInt::from(p))
        .to_biguint()
        .expect("mod_floor is non-negative")
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !crate::primes::is_prime(p) {
        Err(ResidueError::InvalidModulus(p))
    } else {
        Ok(())
    }
}

/// Euler's criterion: `a^((p-1)/2) ≡ 1 (mod p)`.
pub fn euler_is_qr(a: &BigInt, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    let r = reduce(a, p);
    if r.is_zero() {
        return Err(ResidueError::ZeroResidue { a: a.clone(), p });
    }
    let pb = BigUint::from(p);
    Ok(r.modpow(&BigUint::from((p - 1) / 2), &pb).is_one())
}

/// Solvability of `x² ≡ c (mod p)`, counting `c ≡ 0` as solvable.
pub fn is_square_mod(c: &BigInt, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    if reduce(c, p).is_zero() {
        return Ok(true);
    }
    euler_is_qr(c, p)
}

/// Square root modulo an odd prime by Tonelli–Shanks; returns the smaller
/// of the two roots.
pub fn sqrt_mod(a: &BigInt, p: u64) -> Result<Residue> {
    require_odd_prime(p)?;
    let n = reduce(a, p);
    if n.is_zero() {
        return Ok(Residue { modulus: p, value: 0 });
    }
    if !euler_is_qr(a, p)? {
        return Err(ResidueError::NonResidue { a: a.clone(), p });
    }
    let pb = BigUint::from(p);
    let one = BigUint::one();

    // p - 1 = q * 2^s with q odd
    let mut q = BigUint::from(p - 1);
    let mut s = 0u32;
    while q.is_even() {
        q >>= 1;
        s += 1;
    }

    let root = if s == 1 {
        n.modpow(&BigUint::from((p + 1) / 4), &pb)
    } else {
        let half = BigUint::from((p - 1) / 2);
        let mut z = BigUint::from(2u32);
        while z.modpow(&half, &pb).is_one() {
            z += 1u32;
        }
        let mut m = s;
        let mut c = z.modpow(&q, &pb);
        let mut t = n.modpow(&q, &pb);
        let mut r = n.modpow(&((&q + &one) >> 1), &pb);
        while !t.is_one() {
            // least i with t^(2^i) = 1
            let mut i = 0u32;
            let mut t2 = t.clone();
            while !t2.is_one() {
                t2 = (&t2 * &t2) % &pb;
                i += 1;
            }
            let b = c.modpow(&(BigUint::one() << (m - i - 1)), &pb);
            m = i;
            c = (&b * &b) % &pb;
            t = (t * &c) % &pb;
            r = (r * b) % &pb;
        }
        r
    };
    let other = &pb - &root;
    let value = root.min(other).to_u64().expect("below p");
    Ok(Residue { modulus: p, value })
}

/// Whether `-3` has a square root in `Q_p`, decided from residues alone.
pub fn minus_three_is_square(p: u64) -> bool {
    match p {
        // -3 ≡ 5 (mod 8) is not a 2-adic square
        2 => false,
        // odd valuation
        3 => false,
        _ => euler_is_qr(&BigInt::from(-3), p).unwrap_or(false),
    }
}

/// Count of translation-invariant quasi Gibbs measures for coupling `j`.
pub fn ti_condition(p: u64, j: i64) -> Result<ExistenceVerdict> {
    if j == 0 {
        return Err(ResidueError::ZeroCoupling);
    }
    if j < 0 {
        return Ok(ExistenceVerdict {
            count: 3,
            reason: VerdictReason::NegativeCoupling,
            witnesses: vec![],
        });
    }
    if p <= 5 {
        return Ok(ExistenceVerdict {
            count: 1,
            reason: VerdictReason::SmallPrime,
            witnesses: vec![],
        });
    }
    let five = BigInt::from(5);
    if !euler_is_qr(&five, p)? {
        return Ok(ExistenceVerdict {
            count: 1,
            reason: VerdictReason::NonResidueDiscriminant,
            witnesses: vec![],
        });
    }
    let x0 = sqrt_mod(&five, p)?;
    let c = BigInt::from(2 * x0.value) - 6;
    if is_square_mod(&c, p)? {
        let w = sqrt_mod(&c, p)?;
        Ok(ExistenceVerdict {
            count: 3,
            reason: VerdictReason::CongruenceSolvable,
            witnesses: vec![x0, w],
        })
    } else {
        Ok(ExistenceVerdict {
            count: 1,
            reason: VerdictReason::NonResidueRoot,
            witnesses: vec![x0],
        })
    }
}

/// Count of 2-periodic (level-alternating) quasi Gibbs measures; always 0 or 2.
pub fn periodic_condition(p: u64, j: i64) -> Result<ExistenceVerdict> {
    if j == 0 {
        return Err(ResidueError::ZeroCoupling);
    }
    if j > 0 {
        if p == 2 {
            return Ok(ExistenceVerdict {
                count: 0,
                reason: VerdictReason::SmallPrime,
                witnesses: vec![],
            });
        }
        if p % 4 == 1 {
            let i = sqrt_mod(&BigInt::from(-1), p)?;
            return Ok(ExistenceVerdict {
                count: 2,
                reason: VerdictReason::CongruenceSolvable,
                witnesses: vec![i],
            });
        }
        return Ok(ExistenceVerdict {
            count: 0,
            reason: VerdictReason::NonResidueRoot,
            witnesses: vec![],
        });
    }
    if p <= 3 {
        return Ok(ExistenceVerdict {
            count: 0,
            reason: VerdictReason::SmallPrime,
            witnesses: vec![],
        });
    }
    let minus_three = BigInt::from(-3);
    if !euler_is_qr(&minus_three, p)? {
        return Ok(ExistenceVerdict {
            count: 0,
            reason: VerdictReason::NonResidueDiscriminant,
            witnesses: vec![],
        });
    }
    let x0 = sqrt_mod(&minus_three, p)?;
    let c = BigInt::from(2 * x0.value) - 2;
    if is_square_mod(&c, p)? {
        let w = sqrt_mod(&c, p)?;
        Ok(ExistenceVerdict {
            count: 2,
            reason: VerdictReason::CongruenceSolvable,
            witnesses: vec![x0, w],
        })
    } else {
        Ok(ExistenceVerdict {
            count: 0,
            reason: VerdictReason::NonResidueRoot,
            witnesses: vec![x0],
        })
    }
}
