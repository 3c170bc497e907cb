use serde::Serialize;

use super::{ModelError, Result};
use crate::padic::{Padic, GUARD_DIGITS};
use crate::primes::is_prime;

/// Prime, couplings and target precision `K` of a model instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModelParams {
    prime: u64,
    j1: i64,
    j2: i64,
    precision: i64,
}

impl ModelParams {
    pub fn new(prime: u64, j1: i64, j2: i64, precision: i64) -> Result<Self> {
        if !is_prime(prime) {
            return Err(ModelError::InvalidParams(format!("{prime} is not prime")));
        }
        if precision <= GUARD_DIGITS {
            return Err(ModelError::InvalidParams(format!(
                "precision must exceed the {GUARD_DIGITS} guard digits, got {precision}"
            )));
        }
        if j1.unsigned_abs().max(j2.unsigned_abs()) > 1_000 {
            return Err(ModelError::InvalidParams("|J| above 1000 is not supported".into()));
        }
        Ok(ModelParams {
            prime,
            j1,
            j2,
            precision,
        })
    }

    pub fn symmetric(prime: u64, j: i64, precision: i64) -> Result<Self> {
        Self::new(prime, j, j, precision)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn j1(&self) -> i64 {
        self.j1
    }

    pub fn j2(&self) -> i64 {
        self.j2
    }

    /// Requested absolute precision `K`.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// The common coupling `J`; the solver theory needs `J1 = J2 != 0`.
    pub fn coupling(&self) -> Result<i64> {
        if self.j1 != self.j2 {
            return Err(ModelError::UnequalCouplings {
                j1: self.j1,
                j2: self.j2,
            });
        }
        if self.j1 == 0 {
            return Err(ModelError::ZeroCoupling);
        }
        Ok(self.j1)
    }

    /// Precision used for intermediate values. Partition sums at depth 3
    /// shift valuations by up to `21|J|` in either direction and boundary
    /// products add a few more `|J|`, so the headroom scales with `|J|`.
    pub fn working_precision(&self) -> i64 {
        let j = self.j1.unsigned_abs().max(self.j2.unsigned_abs()) as i64;
        self.precision + 24 + 64 * j
    }

    /// A difference is zero when it vanishes to this order.
    pub fn guard_threshold(&self) -> i64 {
        self.precision - GUARD_DIGITS
    }

    /// `θ = p^(2J)`.
    pub fn theta(&self) -> Result<Padic> {
        let j = self.coupling()?;
        Ok(Padic::power_of_p(self.prime, 2 * j, self.working_precision()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_valuation() {
        for j in [-3, -1, 1, 4] {
            let m = ModelParams::symmetric(7, j, 20).unwrap();
            assert_eq!(m.theta().unwrap().valuation(), Some(2 * j));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(ModelParams::symmetric(9, 1, 20).unwrap_err().name(), "InvalidParams");
        assert_eq!(ModelParams::symmetric(5, 1, 4).unwrap_err().name(), "InvalidParams");
        let m = ModelParams::new(5, 1, 2, 20).unwrap();
        assert_eq!(m.coupling().unwrap_err().name(), "UnequalCouplings");
        assert_eq!(
            ModelParams::symmetric(5, 0, 20).unwrap().coupling().unwrap_err().name(),
            "ZeroCoupling"
        );
    }
}
