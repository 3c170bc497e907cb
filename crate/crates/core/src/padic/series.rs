use super::{Padic, PadicError, Result};

/// `floor(log_p n)` for `n ≥ 1`.
fn floor_log(n: u64, p: u64) -> i64 {
    let mut k = 0;
    let mut acc = p;
    while acc <= n {
        k += 1;
        match acc.checked_mul(p) {
            Some(next) => acc = next,
            None => break,
        }
    }
    k
}

impl Padic {
    /// `log_p(x) = Σ (-1)^(n+1) (x-1)^n / n`, defined for `|x - 1|_p < 1`.
    pub fn log_p(&self) -> Result<Padic> {
        let p = self.prime;
        let k = self.precision;
        let y = self.sub(&Padic::one(p, k))?;
        if y.is_zero() {
            return Ok(Padic::zero(p, y.precision()));
        }
        let v = y.valuation;
        if v < 1 {
            return Err(PadicError::DomainError(format!(
                "log_p needs |x - 1|_p < 1, got valuation {v}"
            )));
        }
        // term n has valuation ≥ n·v - floor(log_p n), which is nondecreasing in n
        let mut terms = Vec::new();
        let mut power = y.clone();
        let mut n: u64 = 1;
        while (n as i64) * v - floor_log(n, p) < k {
            let term = power.div_int(n)?;
            terms.push(if n.is_multiple_of(2) { term.neg() } else { term });
            power = power.mul(&y)?;
            n += 1;
        }
        Padic::sum(p, &terms).map(|s| s.truncate(k))
    }

    /// `exp_p(x) = Σ x^n / n!`, defined for valuation ≥ 1 (p odd) or ≥ 2 (p = 2).
    pub fn exp_p(&self) -> Result<Padic> {
        let p = self.prime;
        let k = self.precision;
        if self.is_zero() {
            return Ok(Padic::one(p, k));
        }
        let v = self.valuation;
        let min_v = if p == 2 { 2 } else { 1 };
        if v < min_v {
            return Err(PadicError::DomainError(format!(
                "exp_p needs valuation ≥ {min_v} for p = {p}, got {v}"
            )));
        }
        // v_p(n!) ≤ (n-1)/(p-1), so n·v - floor((n-1)/(p-1)) bounds every later term
        let mut terms = vec![Padic::one(p, k)];
        let mut term = Padic::one(p, k);
        let mut n: u64 = 1;
        while (n as i64) * v - (((n - 1) / (p - 1)) as i64) < k {
            term = term.mul(self)?.div_int(n)?;
            terms.push(term.clone());
            n += 1;
        }
        Padic::sum(p, &terms).map(|s| s.truncate(k))
    }
}
