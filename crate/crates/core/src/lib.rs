//! Search for perfectly balanced Boolean functions with high non-linearity.
//!
//! The crate provides the building blocks and the search itself:
//!
//! - [`boolfn`]: balanced truth tables, parsing and formatting;
//! - [`spectrum`]: exact Walsh-Hadamard transforms (fast, naive, and the
//!   linear-time swap update), non-linearity, magnitude histograms;
//! - [`mutation`]: balancedness-preserving mutation operators;
//! - [`criteria`]: acceptance criteria, including the histogram comparator
//!   that refines plain fitness by walking magnitude histograms from the
//!   largest absolute value down;
//! - [`search`]: first-improvement local search over the single-swap
//!   neighborhood with deterministic seeding and batch execution;
//! - [`stats`]: the correlation coefficients and significance tests used to
//!   evaluate experiments;
//! - [`census`]: exhaustive enumeration of balanced functions at small sizes,
//!   the ground-truth oracle for attainable non-linearity.

pub mod boolfn;
pub mod census;
pub mod criteria;
pub mod error;
pub mod mutation;
pub mod search;
pub mod spectrum;
pub mod stats;

pub use boolfn::{TableFormat, TruthTable, MAX_N_VARS};
pub use census::{census, enumerate_balanced, BalancedTables, CensusReport, MAX_CENSUS_N_VARS};
pub use criteria::{compare_histograms, fitness1, fitness2, is_strict_improvement, Preference};
pub use error::{Error, Result};
pub use mutation::{
    mutate_cyclic_shift, mutate_inversion, mutate_permutation, mutate_swap, MutationKind,
};
pub use search::{
    derive_run_seed, first_improvement_ls, run_batch, BatchResult, BatchSummaryRecord, Criterion,
    NeighborOrder, RunRecord, RunResult, RunStatus, SearchConfig,
};
pub use spectrum::{fwht, naive_wht, SpectrumHistogram, WalshSpectrum};
pub use stats::{
    fisher_exact, mann_whitney_u, pearson, spearman, summary, Alternative, ContingencyTable2x2,
    MannWhitney, SummaryStats,
};
