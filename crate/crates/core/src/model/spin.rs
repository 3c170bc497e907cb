use std::fmt;
use std::str::FromStr;

use super::tree::{TreeLevels, MAX_TREE_DEPTH};
use super::{ModelError, ModelParams, Result};

/// A ±1 assignment on `V_n`, one bit per heap index (set bit = +1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinConfig {
    depth: u32,
    bits: Vec<u64>,
}

fn word_count(depth: u32) -> usize {
    (((1u64 << (depth + 1)) - 1) as usize).div_ceil(64)
}

impl SpinConfig {
    pub fn all_plus(depth: u32) -> Result<Self> {
        let mut s = Self::all_minus(depth)?;
        for x in 1..(1u64 << (depth + 1)) {
            s.set(x, 1);
        }
        Ok(s)
    }

    pub fn all_minus(depth: u32) -> Result<Self> {
        TreeLevels::new(depth)?;
        Ok(SpinConfig {
            depth,
            bits: vec![0; word_count(depth)],
        })
    }

    /// The canonical configuration with opposite spins on every sibling pair:
    /// root and left children +1, right children -1.
    pub fn sibling_alternating(depth: u32) -> Result<Self> {
        let mut s = Self::all_minus(depth)?;
        for x in 1..(1u64 << (depth + 1)) {
            if x == 1 || x % 2 == 0 {
                s.set(x, 1);
            }
        }
        Ok(s)
    }

    /// Configuration whose bit `x - 1` of `mask` is the spin of vertex `x`.
    pub fn from_mask(depth: u32, mask: u64) -> Result<Self> {
        if depth > 5 {
            return Err(ModelError::DepthLimit { depth, max: 5 });
        }
        let n = (1u64 << (depth + 1)) - 1;
        let mask = if n == 64 { mask } else { mask & ((1u64 << n) - 1) };
        Ok(SpinConfig {
            depth,
            bits: vec![mask],
        })
    }

    /// Inverse of [`SpinConfig::from_mask`] for depth ≤ 5.
    pub fn mask(&self) -> Option<u64> {
        (self.depth <= 5).then(|| self.bits[0])
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn spin(&self, x: u64) -> i64 {
        let i = (x - 1) as usize;
        if self.bits[i / 64] >> (i % 64) & 1 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn set(&mut self, x: u64, spin: i64) {
        let i = (x - 1) as usize;
        if spin > 0 {
            self.bits[i / 64] |= 1 << (i % 64);
        } else {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    /// `σ ∨ φ`: this configuration on `V_n` extended by `leaves` on `W_(n+1)`.
    pub fn extend(&self, leaves: &[i64]) -> Result<Self> {
        let depth = self.depth + 1;
        if leaves.len() as u64 != 1u64 << depth {
            return Err(ModelError::InvalidSpinString(format!(
                "expected {} leaf spins, got {}",
                1u64 << depth,
                leaves.len()
            )));
        }
        let mut out = Self::all_minus(depth)?;
        for x in 1..(1u64 << depth) {
            out.set(x, self.spin(x));
        }
        for (i, &s) in leaves.iter().enumerate() {
            out.set((1u64 << depth) + i as u64, s);
        }
        Ok(out)
    }

    /// Restriction to `V_depth`.
    pub fn restrict(&self, depth: u32) -> Self {
        let mut out = Self::all_minus(depth.min(self.depth)).expect("smaller depth is valid");
        for x in 1..(1u64 << (out.depth + 1)) {
            out.set(x, self.spin(x));
        }
        out
    }
}

impl fmt::Display for SpinConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 1..(1u64 << (self.depth + 1)) {
            f.write_str(if self.spin(x) > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SpinConfig {
    type Err = ModelError;

    /// Accepts `+`/`-` (or the Unicode minus) in heap order.
    fn from_str(s: &str) -> Result<Self> {
        let spins: Vec<i64> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                _ => Err(ModelError::InvalidSpinString(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<_>>()?;
        let n = spins.len() as u64 + 1;
        if !n.is_power_of_two() || n < 2 {
            return Err(ModelError::InvalidSpinString(format!(
                "length {} is not 2^(n+1) - 1",
                spins.len()
            )));
        }
        let depth = n.trailing_zeros() - 1;
        if depth > MAX_TREE_DEPTH {
            return Err(ModelError::DepthLimit {
                depth,
                max: MAX_TREE_DEPTH,
            });
        }
        let mut out = Self::all_minus(depth)?;
        for (i, s) in spins.into_iter().enumerate() {
            out.set(i as u64 + 1, s);
        }
        Ok(out)
    }
}

/// Edge and sibling sums `(Σ σ(x)σ(y), Σ σ(y)σ(z))` over `V_n`.
pub(crate) fn interaction_sums(sigma: &SpinConfig) -> (i64, i64) {
    let mut edges = 0;
    let mut siblings = 0;
    for x in 1..(1u64 << sigma.depth) {
        let (sx, sy, sz) = (sigma.spin(x), sigma.spin(2 * x), sigma.spin(2 * x + 1));
        edges += sx * sy + sx * sz;
        siblings += sy * sz;
    }
    (edges, siblings)
}

/// Same as [`interaction_sums`] on a raw mask (bit `x - 1` = spin of `x`).
pub(crate) fn mask_interaction_sums(mask: u64, depth: u32) -> (i64, i64) {
    let spin = |x: u64| if mask >> (x - 1) & 1 == 1 { 1i64 } else { -1 };
    let mut edges = 0;
    let mut siblings = 0;
    for x in 1..(1u64 << depth) {
        let (sx, sy, sz) = (spin(x), spin(2 * x), spin(2 * x + 1));
        edges += sx * sy + sx * sz;
        siblings += sy * sz;
    }
    (edges, siblings)
}

/// `H_n(σ) = J1 Σ_edges σ(x)σ(y) + J2 Σ_siblings σ(y)σ(z)`.
pub fn hamiltonian(sigma: &SpinConfig, params: &ModelParams) -> i64 {
    let (e, s) = interaction_sums(sigma);
    params.j1() * e + params.j2() * s
}
