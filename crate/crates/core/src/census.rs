//! Exhaustive enumeration of all balanced truth tables for small variable
//! counts. Serves as the ground-truth oracle for attainable non-linearity
//! values at desk scale.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::boolfn::TruthTable;
use crate::error::{Error, Result};
use crate::spectrum::fwht;

/// Enumeration is refused above this size: the count of balanced tables is
/// `C(2^n, 2^(n-1))`, which is 12870 at `n = 4` but roughly `6 * 10^8` at
/// `n = 5`.
pub const MAX_CENSUS_N_VARS: u32 = 4;

/// Distribution of non-linearity over every balanced function on `n_vars`
/// inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n_vars: u32,
    pub total_balanced: u64,
    pub nl_distribution: BTreeMap<u32, u64>,
    pub max_nl: u32,
}

/// Streaming iterator over all balanced tables on `n_vars` inputs, in
/// lexicographic order of the sets of one-positions.
pub struct BalancedTables {
    len: usize,
    ones: usize,
    positions: Option<Vec<usize>>,
}

impl Iterator for BalancedTables {
    type Item = TruthTable;

    fn next(&mut self) -> Option<TruthTable> {
        let positions = self.positions.as_mut()?;
        let mut bits = vec![0u8; self.len];
        for &p in positions.iter() {
            bits[p] = 1;
        }
        let table = TruthTable::from_bits(bits).expect("enumerated table is well-formed");

        // Advance to the next combination.
        let k = self.ones;
        let mut i = k;
        while i > 0 && positions[i - 1] == self.len - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            self.positions = None;
        } else {
            positions[i - 1] += 1;
            for idx in i..k {
                positions[idx] = positions[idx - 1] + 1;
            }
        }
        Some(table)
    }
}

fn check_census_size(n_vars: u32) -> Result<()> {
    if n_vars < 1 {
        return Err(Error::InvalidParameter(
            "a Boolean function needs at least one variable".into(),
        ));
    }
    if n_vars > MAX_CENSUS_N_VARS {
        return Err(Error::InvalidParameter(format!(
            "enumeration of balanced tables on {n_vars} variables is refused: \
             C(2^{n_vars}, 2^{}) tables is beyond desk scale (the cap is {MAX_CENSUS_N_VARS})",
            n_vars - 1
        )));
    }
    Ok(())
}

/// Yields each balanced table on `n_vars` inputs exactly once.
pub fn enumerate_balanced(n_vars: u32) -> Result<BalancedTables> {
    check_census_size(n_vars)?;
    let len = 1usize << n_vars;
    let ones = len / 2;
    Ok(BalancedTables {
        len,
        ones,
        positions: Some((0..ones).collect()),
    })
}

/// Sweeps every balanced table, recording the non-linearity distribution.
pub fn census(n_vars: u32) -> Result<CensusReport> {
    let mut nl_distribution = BTreeMap::new();
    let mut total = 0u64;
    for table in enumerate_balanced(n_vars)? {
        let nl = fwht(&table).nonlinearity();
        *nl_distribution.entry(nl).or_insert(0u64) += 1;
        total += 1;
    }
    let max_nl = *nl_distribution.keys().next_back().expect("non-empty census");
    Ok(CensusReport {
        n_vars,
        total_balanced: total,
        nl_distribution,
        max_nl,
    })
}
