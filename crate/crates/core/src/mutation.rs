//! Balancedness-preserving mutation operators: swaps (single and multiple),
//! cyclic shifts, substring reversal, and substring permutation. Every
//! operator maps a balanced table to a distinct balanced table.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::boolfn::TruthTable;
use crate::error::{Error, Result};

/// A choice of mutation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationKind {
    /// `k` simultaneous swaps of a one with a zero, no position touched twice.
    Swap(u32),
    /// Rotation of the whole table to the right by a random amount.
    CyclicShift,
    /// Reversal of a random substring.
    Inversion,
    /// Uniform re-permutation of a random substring.
    Permutation,
}

impl MutationKind {
    /// Applies the operator, returning a fresh table distinct from `t`.
    pub fn apply<R: Rng + ?Sized>(&self, t: &TruthTable, rng: &mut R) -> Result<TruthTable> {
        match *self {
            MutationKind::Swap(k) => mutate_swap(t, k, rng).map(|(t, _)| t),
            MutationKind::CyclicShift => mutate_cyclic_shift(t, rng),
            MutationKind::Inversion => mutate_inversion(t, rng),
            MutationKind::Permutation => mutate_permutation(t, rng),
        }
    }
}

impl fmt::Display for MutationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MutationKind::Swap(k) => write!(f, "swap:{k}"),
            MutationKind::CyclicShift => write!(f, "shift"),
            MutationKind::Inversion => write!(f, "inversion"),
            MutationKind::Permutation => write!(f, "permutation"),
        }
    }
}

impl FromStr for MutationKind {
    type Err = Error;

    /// Accepts `swap` (= `swap:1`), `swap:K`, `shift`, `inversion`,
    /// `permutation`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "swap" => return Ok(MutationKind::Swap(1)),
            "shift" => return Ok(MutationKind::CyclicShift),
            "inversion" => return Ok(MutationKind::Inversion),
            "permutation" => return Ok(MutationKind::Permutation),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("swap:") {
            let k: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad swap count in {s:?}")))?;
            if k < 1 {
                return Err(Error::Parse("swap count must be at least 1".into()));
            }
            return Ok(MutationKind::Swap(k));
        }
        Err(Error::Parse(format!(
            "unknown mutation {s:?}; expected swap[:k], shift, inversion or permutation"
        )))
    }
}

fn require_balanced(t: &TruthTable) -> Result<()> {
    if !t.is_balanced() {
        return Err(Error::InvalidParameter(
            "mutation operators require a balanced table".into(),
        ));
    }
    Ok(())
}

/// Performs `k` swaps of a one-position with a zero-position, each pair drawn
/// uniformly among the positions not already swapped, so no later swap can
/// undo an earlier one. Returns the mutated table and the swapped pairs as
/// `(one_position, zero_position)`.
///
/// The result differs from `t` in exactly `2k` positions.
pub fn mutate_swap<R: Rng + ?Sized>(
    t: &TruthTable,
    k: u32,
    rng: &mut R,
) -> Result<(TruthTable, Vec<(usize, usize)>)> {
    require_balanced(t)?;
    if k < 1 {
        return Err(Error::InvalidParameter("swap count must be at least 1".into()));
    }
    if 2 * k as usize > t.len() {
        return Err(Error::InvalidParameter(format!(
            "{k} swaps need {} distinct positions but the table has {}",
            2 * k,
            t.len()
        )));
    }
    let mut ones = t.one_positions();
    let mut zeros = t.zero_positions();
    let mut bits = t.bits().to_vec();
    let mut pairs = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let i = ones.swap_remove(rng.gen_range(0..ones.len()));
        let j = zeros.swap_remove(rng.gen_range(0..zeros.len()));
        bits.swap(i, j);
        pairs.push((i, j));
    }
    Ok((TruthTable::from_bits(bits)?, pairs))
}

/// Rotates the table to the right by an amount drawn uniformly from
/// `1..=L-1`, redrawing in the rare case a periodic table maps to itself.
pub fn mutate_cyclic_shift<R: Rng + ?Sized>(t: &TruthTable, rng: &mut R) -> Result<TruthTable> {
    require_balanced(t)?;
    let len = t.len();
    loop {
        let shift = rng.gen_range(1..len);
        let mut bits = vec![0u8; len];
        for (i, &b) in t.bits().iter().enumerate() {
            bits[(i + shift) % len] = b;
        }
        if bits != t.bits() {
            return TruthTable::from_bits(bits);
        }
    }
}

/// Reverses the substring between two positions drawn uniformly among all
/// `i < j`, redrawing while the substring is palindromic.
pub fn mutate_inversion<R: Rng + ?Sized>(t: &TruthTable, rng: &mut R) -> Result<TruthTable> {
    require_balanced(t)?;
    let len = t.len();
    loop {
        let (i, j) = random_window(len, rng);
        let mut bits = t.bits().to_vec();
        bits[i..=j].reverse();
        if bits != t.bits() {
            return TruthTable::from_bits(bits);
        }
    }
}

/// Uniformly re-permutes the substring between two positions drawn uniformly
/// among all `i < j`, redrawing the window while the shuffle reproduces the
/// input.
pub fn mutate_permutation<R: Rng + ?Sized>(t: &TruthTable, rng: &mut R) -> Result<TruthTable> {
    require_balanced(t)?;
    let len = t.len();
    loop {
        let (i, j) = random_window(len, rng);
        let mut bits = t.bits().to_vec();
        bits[i..=j].shuffle(rng);
        if bits != t.bits() {
            return TruthTable::from_bits(bits);
        }
    }
}

fn random_window<R: Rng + ?Sized>(len: usize, rng: &mut R) -> (usize, usize) {
    loop {
        let a = rng.gen_range(0..len);
        let b = rng.gen_range(0..len);
        if a != b {
            return (a.min(b), a.max(b));
        }
    }
}
