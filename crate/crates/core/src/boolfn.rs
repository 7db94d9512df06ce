//! Truth-table representation of Boolean functions and elementary metrics.
//!
//! A function on `n` variables is stored as its value vector: a sequence of
//! `2^n` output bits, where entry `i` is the output for the input whose
//! binary expansion is `i` (least-significant bit = first input variable).

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported number of input variables. Keeps table sizes sane and
/// guarantees Walsh-Hadamard coefficients fit an `i32` with headroom.
pub const MAX_N_VARS: u32 = 20;

/// Text encodings accepted and produced at program boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    /// One `'0'`/`'1'` character per table entry, index 0 first.
    Binary,
    /// One character per 4 table entries; index 0 occupies the
    /// most-significant bit of the first character.
    Hex,
}

/// The value vector of a Boolean function on `n_vars` inputs.
///
/// Immutable after construction; mutation operators and the search return
/// fresh tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n_vars: u32,
    bits: Vec<u8>,
}

impl TruthTable {
    /// Builds a table from explicit output bits. The length must be `2^n`
    /// for some `n >= 1` and every entry must be 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        let len = bits.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "table length {len} is not a power of two >= 2"
            )));
        }
        let n_vars = len.trailing_zeros();
        if n_vars > MAX_N_VARS {
            return Err(Error::InvalidParameter(format!(
                "{n_vars} variables exceeds the supported maximum of {MAX_N_VARS}"
            )));
        }
        if let Some(bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidParameter(format!(
                "table entries must be 0 or 1, found {bad}"
            )));
        }
        Ok(Self { n_vars, bits })
    }

    /// Draws a perfectly balanced table uniformly at random: a fixed
    /// multiset of `2^(n-1)` ones and `2^(n-1)` zeros, shuffled.
    pub fn random_balanced<R: Rng + ?Sized>(n_vars: u32, rng: &mut R) -> Result<Self> {
        if n_vars < 1 {
            return Err(Error::InvalidParameter(
                "a Boolean function needs at least one variable".into(),
            ));
        }
        if n_vars > MAX_N_VARS {
            return Err(Error::InvalidParameter(format!(
                "{n_vars} variables exceeds the supported maximum of {MAX_N_VARS}"
            )));
        }
        let len = 1usize << n_vars;
        let mut bits = vec![0u8; len];
        bits[len / 2..].fill(1);
        bits.shuffle(rng);
        Ok(Self { n_vars, bits })
    }

    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    /// Number of table entries, `2^n_vars`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Output bit for input index `i`.
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of ones in the value vector.
    pub fn hamming_weight(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    /// A table is perfectly balanced when exactly half its entries are ones.
    pub fn is_balanced(&self) -> bool {
        self.hamming_weight() * 2 == self.len()
    }

    /// Number of positions where the two tables differ.
    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::InvalidParameter(format!(
                "table lengths differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Indices holding a one.
    pub fn one_positions(&self) -> Vec<usize> {
        self.positions_of(1)
    }

    /// Indices holding a zero.
    pub fn zero_positions(&self) -> Vec<usize> {
        self.positions_of(0)
    }

    fn positions_of(&self, value: u8) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| (b == value).then_some(i))
            .collect()
    }

    /// Fresh table with the entries at `i` and `j` exchanged.
    pub fn with_swapped(&self, i: usize, j: usize) -> Self {
        let mut bits = self.bits.clone();
        bits.swap(i, j);
        Self {
            n_vars: self.n_vars,
            bits,
        }
    }

    /// Parses a table from its textual form.
    pub fn parse(text: &str, format: TableFormat) -> Result<Self> {
        match format {
            TableFormat::Binary => Self::parse_binary(text),
            TableFormat::Hex => Self::parse_hex(text),
        }
    }

    fn parse_binary(text: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::Parse(format!(
                        "illegal character {c:?} in binary truth table"
                    )))
                }
            }
        }
        Self::from_bits(bits).map_err(|e| Error::Parse(e.to_string()))
    }

    fn parse_hex(text: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(text.len() * 4);
        for c in text.chars() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("illegal character {c:?} in hex truth table")))?
                as u8;
            for shift in (0..4).rev() {
                bits.push((nibble >> shift) & 1);
            }
        }
        Self::from_bits(bits).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Renders the table in the requested format. Hex requires the length to
    /// be a multiple of 4, i.e. at least two variables.
    pub fn to_text(&self, format: TableFormat) -> Result<String> {
        match format {
            TableFormat::Binary => Ok(self.to_binary_string()),
            TableFormat::Hex => self.to_hex_string(),
        }
    }

    pub fn to_binary_string(&self) -> String {
        self.bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }

    pub fn to_hex_string(&self) -> Result<String> {
        if self.len() % 4 != 0 {
            return Err(Error::InvalidParameter(format!(
                "a table of length {} cannot be rendered as hex",
                self.len()
            )));
        }
        Ok(self
            .bits
            .chunks_exact(4)
            .map(|nib| {
                let v = nib[0] << 3 | nib[1] << 2 | nib[2] << 1 | nib[3];
                char::from_digit(v as u32, 16).expect("nibble in range")
            })
            .collect())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n_vars, self.to_binary_string())
    }
}
