//! Walsh-Hadamard spectra: the full transform (fast and naive variants), the
//! linear-time swap update, non-linearity, and magnitude histograms.
//!
//! All arithmetic is exact integer arithmetic. `coeffs[a]` is the correlation
//! between the function and the linear function `x -> a.x`, where `a.x` is
//! the parity of the bitwise AND of the integer indices `a` and `x`.

use std::collections::BTreeMap;

use crate::boolfn::TruthTable;
use crate::error::{Error, Result};

/// The `2^n` signed Walsh-Hadamard coefficients of a Boolean function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalshSpectrum {
    n_vars: u32,
    coeffs: Vec<i32>,
}

/// Counts of absolute coefficient values occurring in a spectrum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumHistogram {
    n_vars: u32,
    counts: BTreeMap<u32, u32>,
}

/// Reference transform straight from the definition: a double loop over all
/// `(a, x)` pairs, O(L^2). Kept as the correctness oracle for [`fwht`].
pub fn naive_wht(table: &TruthTable) -> WalshSpectrum {
    let len = table.len();
    let coeffs = (0..len)
        .map(|a| {
            (0..len)
                .map(|x| {
                    let parity = ((a & x).count_ones() & 1) as u8;
                    if table.bit(x) ^ parity == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .sum()
        })
        .collect();
    WalshSpectrum {
        n_vars: table.n_vars(),
        coeffs,
    }
}

/// Fast Walsh-Hadamard transform: in-place butterfly over the `(-1)^f(x)`
/// vector, O(L log L). Agrees with [`naive_wht`] exactly.
pub fn fwht(table: &TruthTable) -> WalshSpectrum {
    let len = table.len();
    let mut coeffs: Vec<i32> = table
        .bits()
        .iter()
        .map(|&b| if b == 0 { 1 } else { -1 })
        .collect();
    let mut half = 1;
    while half < len {
        for block in coeffs.chunks_exact_mut(half * 2) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        half *= 2;
    }
    WalshSpectrum {
        n_vars: table.n_vars(),
        coeffs,
    }
}

impl WalshSpectrum {
    /// Wraps an explicit coefficient vector. Only the length is validated;
    /// the coefficients are trusted.
    pub fn from_coeffs(n_vars: u32, coeffs: Vec<i32>) -> Result<Self> {
        if n_vars < 1 || coeffs.len() != 1usize << n_vars {
            return Err(Error::InvalidParameter(format!(
                "expected 2^{} coefficients, got {}",
                n_vars,
                coeffs.len()
            )));
        }
        Ok(Self { n_vars, coeffs })
    }

    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    /// Largest absolute coefficient value.
    pub fn max_abs(&self) -> u32 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).max().expect("non-empty")
    }

    /// Non-linearity: `2^(n-1) - max_abs/2`. An integer in `[0, 2^(n-1)]`.
    pub fn nonlinearity(&self) -> u32 {
        ((1u32 << self.n_vars) - self.max_abs()) / 2
    }

    /// Occurrence counts of each absolute coefficient value.
    pub fn histogram(&self) -> SpectrumHistogram {
        let mut counts = BTreeMap::new();
        for c in &self.coeffs {
            *counts.entry(c.unsigned_abs()).or_insert(0u32) += 1;
        }
        SpectrumHistogram {
            n_vars: self.n_vars,
            counts,
        }
    }

    /// Spectrum of the table obtained from `before` by swapping the unequal
    /// entries at `i` and `j`, computed from `self` in O(L).
    ///
    /// `self` must be the spectrum of `before`; each flipped position `x`
    /// contributes `-2 * (-1)^(f(x) XOR a.x)` to coefficient `a`.
    pub fn updated_after_swap(
        &self,
        before: &TruthTable,
        i: usize,
        j: usize,
    ) -> Result<WalshSpectrum> {
        let mut out = self.clone();
        self.update_after_swap_into(before, i, j, &mut out)?;
        Ok(out)
    }

    /// As [`Self::updated_after_swap`], writing into an existing spectrum to
    /// avoid allocation. `dst` must have the same length as `self`.
    pub fn update_after_swap_into(
        &self,
        before: &TruthTable,
        i: usize,
        j: usize,
        dst: &mut WalshSpectrum,
    ) -> Result<()> {
        let len = self.len();
        if before.len() != len {
            return Err(Error::InvalidSwap(format!(
                "table length {} does not match spectrum length {len}",
                before.len()
            )));
        }
        if dst.len() != len {
            return Err(Error::InvalidSwap(format!(
                "destination length {} does not match spectrum length {len}",
                dst.len()
            )));
        }
        if i >= len || j >= len {
            return Err(Error::InvalidSwap(format!(
                "positions ({i}, {j}) out of range for length {len}"
            )));
        }
        if i == j || before.bit(i) == before.bit(j) {
            return Err(Error::InvalidSwap(format!(
                "positions {i} and {j} do not hold distinct values"
            )));
        }
        // Signs of the two affected terms before the swap.
        let sign_i = if before.bit(i) == 1 { 2 } else { -2 };
        let sign_j = -sign_i;
        for (a, out) in dst.coeffs.iter_mut().enumerate() {
            let par_i = ((a & i).count_ones() & 1) as i32;
            let par_j = ((a & j).count_ones() & 1) as i32;
            *out = self.coeffs[a] + sign_i * (1 - 2 * par_i) + sign_j * (1 - 2 * par_j);
        }
        dst.n_vars = self.n_vars;
        Ok(())
    }
}

impl SpectrumHistogram {
    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    /// Counts keyed by absolute coefficient value, ascending.
    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    /// Largest absolute value occurring in the spectrum.
    pub fn max_abs_value(&self) -> u32 {
        *self.counts.keys().next_back().expect("non-empty")
    }

    /// Number of coefficients attaining the maximum absolute value.
    pub fn count_at_max(&self) -> u32 {
        *self.counts.values().next_back().expect("non-empty")
    }

    /// Total count across all values; equals the spectrum length.
    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| c as u64).sum()
    }
}
