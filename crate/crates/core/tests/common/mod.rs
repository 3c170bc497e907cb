//! Oracles shared by the integration suites. Nothing here calls into the
//! library's arithmetic.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `(v_p(n), n / p^v)` for nonzero `n`.
pub fn split(n: &BigInt, p: u64) -> (i64, BigInt) {
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    (v, n)
}

/// `v_p` of a nonzero rational.
pub fn rational_valuation(r: &BigRational, p: u64) -> i64 {
    split(r.numer(), p).0 - split(r.denom(), p).0
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    let e = a.extended_gcd(&m);
    assert_eq!(e.gcd.abs(), 1, "{a} not invertible mod {m}");
    e.x.rem_euclid(m)
}

/// The unit part of `r` reduced modulo `p^k`, with its valuation.
pub fn unit_mod(r: &BigRational, p: u64, k: u32) -> (i64, u64) {
    let (vn, un) = split(r.numer(), p);
    let (vd, ud) = split(r.denom(), p);
    let m = (p as i128).pow(k);
    let mb = BigInt::from(m);
    let un = un.mod_floor(&mb).to_i128().unwrap();
    let ud = ud.mod_floor(&mb).to_i128().unwrap();
    (vn - vd, (un * mod_inverse(ud, m) % m) as u64)
}

/// All `y mod p^k` with `y² ≡ a (mod p^k)`, found by extending every
/// solution modulo `p^i` digit by digit. Exhaustive: each root modulo `p^k`
/// reduces to a root modulo `p^i`.
pub fn roots_mod_prime_power(a: u64, p: u64, k: u32) -> Vec<u64> {
    let mut sols: Vec<u64> = (0..p).filter(|&y| (y * y) % p == a % p).collect();
    let mut m = p as u128;
    for _ in 1..k {
        let next = m * p as u128;
        let target = a as u128 % next;
        let mut lifted = Vec::new();
        for &y in &sols {
            for t in 0..p as u128 {
                let c = y as u128 + t * m;
                if c * c % next == target {
                    lifted.push(c as u64);
                }
            }
        }
        sols = lifted;
        m = next;
    }
    sols
}

/// Brute-force test for a square root of the rational `r` in `Q_p`: even
/// valuation and a unit that is a square modulo `p^6`.
pub fn has_square_root_mod_p6(r: &BigRational, p: u64) -> bool {
    let (v, u) = unit_mod(r, p, 6);
    v % 2 == 0 && !roots_mod_prime_power(u, p, 6).is_empty()
}

/// `p^e` as a rational.
pub fn pow_rational(p: u64, e: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(p).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        b
    } else {
        b.recip()
    }
}

/// Spin of heap vertex `x` in `mask` (bit `x - 1`).
pub fn spin(mask: u64, x: u64) -> i64 {
    if mask >> (x - 1) & 1 == 1 {
        1
    } else {
        -1
    }
}

/// Energy by walking every edge and sibling pair of `V_n`.
pub fn energy(mask: u64, n: u32, j1: i64, j2: i64) -> i64 {
    let mut h = 0;
    for x in 1u64..(1 << n) {
        let (a, b, c) = (spin(mask, x), spin(mask, 2 * x), spin(mask, 2 * x + 1));
        h += j1 * (a * b + a * c) + j2 * b * c;
    }
    h
}

/// Unnormalized weight `p^{H(σ)} Π_{x∈W_n} h_x^{σ(x)}` by direct evaluation.
pub fn weight_oracle(mask: u64, n: u32, p: u64, j: i64, h: &dyn Fn(u64) -> BigRational) -> BigRational {
    let mut w = pow_rational(p, energy(mask, n, j, j));
    for x in (1u64 << n)..(1u64 << (n + 1)) {
        let hx = h(x);
        w *= if spin(mask, x) > 0 { hx } else { hx.recip() };
    }
    w
}

/// Every weight at depth `n`, indexed by mask.
pub fn weights_oracle(n: u32, p: u64, j: i64, h: &dyn Fn(u64) -> BigRational) -> Vec<BigRational> {
    (0..1u64 << ((1u32 << (n + 1)) - 1))
        .map(|m| weight_oracle(m, n, p, j, h))
        .collect()
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `log_p |r|_p`, or `None` for zero.
pub fn log_norm(r: &BigRational, p: u64) -> Option<i64> {
    (!r.is_zero()).then(|| -rational_valuation(r, p))
}

pub fn one() -> BigRational {
    BigRational::one()
}

pub fn is_negative(r: &BigRational) -> bool {
    r.is_negative()
}

/// Translation-invariant count from residues: for J > 0 the two extra
/// fixed points need `√5` and `√-1`; for J < 0 all three always exist.
pub fn ti_count_oracle(p: u64, j: i64) -> usize {
    if j < 0 || matches!(p % 20, 1 | 9) {
        3
    } else {
        1
    }
}

/// 2-cycles need `√-1` when J > 0 and `√-3` when J < 0.
pub fn periodic_count_oracle(p: u64, j: i64) -> usize {
    let found = if j > 0 { p % 4 == 1 } else { p % 3 == 1 };
    if found {
        2
    } else {
        0
    }
}

/// `(θ² u_y u_z + u_y + u_z + 1) / (u_y u_z + u_y + u_z + θ²)` over the rationals.
pub fn rational_recurrence(uy: &BigRational, uz: &BigRational, p: u64, j: i64) -> Option<BigRational> {
    let t = pow_rational(p, 4 * j);
    let num = &t * uy * uz + uy + uz + one();
    let den = uy * uz + uy + uz + t;
    (!den.is_zero()).then(|| num / den)
}
