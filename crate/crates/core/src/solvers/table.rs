use serde::Serialize;

use super::{Result, SolverError};
use crate::model::{ModelError, ModelParams};
use crate::padic::{Padic, DEFAULT_PRECISION};
use crate::residue::minus_three_is_square;

/// Published existence of `√D(θ)` for `J < 0` at small primes.
const PUBLISHED_TABLE: [(u64, bool); 8] = [
    (2, false),
    (3, false),
    (5, false),
    (7, true),
    (11, false),
    (13, true),
    (17, false),
    (19, false),
];

pub fn published_table_value(p: u64) -> Option<bool> {
    PUBLISHED_TABLE.iter().find(|(q, _)| *q == p).map(|&(_, v)| v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub prime: u64,
    /// Published value, where the prime is on the published grid.
    pub paper_value: Option<bool>,
    /// `√D(θ)` exists, from the p-adic expansion of `D(θ)`.
    pub padic_value: bool,
    /// `√-3` exists, from residues alone.
    pub residue_value: bool,
    pub computed_value: bool,
    /// Agreement with the published value.
    pub agree: Option<bool>,
    pub note: Option<String>,
}

/// Existence of `√D(θ)`, `D(θ) = 1 + 2θ² - 3θ⁴`, for each prime at coupling `j < 0`.
pub fn table1(primes: &[u64], j: i64) -> Result<Vec<Table1Row>> {
    if j >= 0 {
        return Err(ModelError::InvalidParams(format!("the table is defined for J < 0, got {j}")).into());
    }
    primes
        .iter()
        .map(|&p| {
            let params = ModelParams::symmetric(p, j, DEFAULT_PRECISION)?;
            let k = params.working_precision();
            let d = Padic::sum(
                p,
                [
                    &Padic::one(p, k),
                    &Padic::power_of_p(p, 4 * j, k).mul_int(2),
                    &Padic::power_of_p(p, 8 * j, k).mul_int(-3),
                ],
            )?;
            let padic_value = d.sqrt_exists()?;
            let residue_value = minus_three_is_square(p);
            if padic_value != residue_value {
                return Err(SolverError::InternalInconsistency(format!(
                    "p = {p}: √D(θ) exists is {padic_value} but √-3 exists is {residue_value}"
                )));
            }
            let paper_value = published_table_value(p);
            let agree = paper_value.map(|v| v == padic_value);
            let note = (agree == Some(false)).then(|| {
                format!(
                    "published {}, computed {}: (-3)^(({p}-1)/2) mod {p} decides √-3",
                    sign(paper_value.expect("on grid")),
                    sign(padic_value)
                )
            });
            Ok(Table1Row {
                prime: p,
                paper_value,
                padic_value,
                residue_value,
                computed_value: padic_value,
                agree,
                note,
            })
        })
        .collect()
}

pub fn sign(v: bool) -> &'static str {
    if v {
        "+"
    } else {
        "-"
    }
}
