//! Solution-quality evaluation: plain non-linearity, the max-count-penalized
//! fitness, and the histogram comparator that decides between two spectra by
//! walking their magnitude histograms from the largest absolute value down.

use crate::error::{Error, Result};
use crate::spectrum::WalshSpectrum;

/// Outcome of comparing two candidate solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preference {
    PreferFirst,
    PreferSecond,
    Tie,
}

impl Preference {
    /// The same comparison with the arguments exchanged.
    pub fn flipped(self) -> Self {
        match self {
            Preference::PreferFirst => Preference::PreferSecond,
            Preference::PreferSecond => Preference::PreferFirst,
            Preference::Tie => Preference::Tie,
        }
    }
}

/// Fitness given by the non-linearity alone. Higher is better.
pub fn fitness1(spec: &WalshSpectrum) -> u32 {
    spec.nonlinearity()
}

/// Non-linearity plus a penalty for repeated occurrences of the maximal
/// absolute spectrum value: `nl + (2^n - count_at_max) / 2^n`.
///
/// The value is always in `[nl, nl + 1)` and is exactly representable in an
/// `f64` for all supported table sizes, so comparisons are exact.
pub fn fitness2(spec: &WalshSpectrum) -> f64 {
    let len = spec.len() as f64;
    let hist = spec.histogram();
    spec.nonlinearity() as f64 + (len - hist.count_at_max() as f64) / len
}

/// Compares two spectra of equal size.
///
/// The spectrum with higher non-linearity (smaller maximal absolute value)
/// wins outright. At equal non-linearity the occurrence counts are compared
/// value by value, walking from the shared maximum absolute value downward;
/// the first strict difference decides, lower count preferred. Identical
/// walks all the way to zero are a [`Preference::Tie`].
pub fn compare_histograms(x: &WalshSpectrum, y: &WalshSpectrum) -> Result<Preference> {
    if x.n_vars() != y.n_vars() {
        return Err(Error::InvalidParameter(format!(
            "cannot compare spectra on {} and {} variables",
            x.n_vars(),
            y.n_vars()
        )));
    }
    let max_x = x.max_abs();
    let max_y = y.max_abs();
    if max_x != max_y {
        return Ok(if max_x < max_y {
            Preference::PreferFirst
        } else {
            Preference::PreferSecond
        });
    }
    // Values above the shared maximum occur in neither spectrum, so the walk
    // can start there. Counts are gathered in one pass per spectrum.
    let max = max_x as usize;
    let counts_x = abs_counts(x, max);
    let counts_y = abs_counts(y, max);
    for v in (0..=max).rev() {
        if counts_x[v] != counts_y[v] {
            return Ok(if counts_x[v] < counts_y[v] {
                Preference::PreferFirst
            } else {
                Preference::PreferSecond
            });
        }
    }
    Ok(Preference::Tie)
}

fn abs_counts(spec: &WalshSpectrum, max: usize) -> Vec<u32> {
    let mut counts = vec![0u32; max + 1];
    for c in spec.coeffs() {
        counts[c.unsigned_abs() as usize] += 1;
    }
    counts
}

/// Strict acceptance test: true only when `candidate` is preferred outright.
/// A tie is not an improvement.
pub fn is_strict_improvement(candidate: &WalshSpectrum, incumbent: &WalshSpectrum) -> Result<bool> {
    Ok(compare_histograms(candidate, incumbent)? == Preference::PreferFirst)
}
