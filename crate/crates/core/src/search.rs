//! First-improvement local search over the single-swap neighborhood, with
//! deterministic seeding, budget accounting, and batch execution.
//!
//! One evaluation is any operation producing a complete spectrum of the
//! current candidate: the initial transform of the starting table counts as
//! one, and every neighbor examined via the linear-time swap update counts
//! as one.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::TruthTable;
use crate::criteria::{fitness1, fitness2, is_strict_improvement};
use crate::error::{Error, Result};
use crate::spectrum::{fwht, WalshSpectrum};
use crate::stats::{summary, SummaryStats};

/// Acceptance criterion driving the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Strictly higher non-linearity.
    Fit1,
    /// Strictly higher max-count-penalized fitness.
    Fit2,
    /// Strict preference under the histogram comparator.
    Hist,
}

impl Criterion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Criterion::Fit1 => "fit1",
            Criterion::Fit2 => "fit2",
            Criterion::Hist => "hist",
        }
    }
}

/// Order in which the swap neighborhood is examined. The two policies differ
/// only in bookkeeping, never in which moves are acceptable, but they shift
/// the evaluation counts; keeping both selectable makes that sensitivity
/// measurable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum NeighborOrder {
    /// After every accepted move, enumerate the neighbors of the new
    /// incumbent in a fresh uniformly random order.
    #[default]
    FreshShuffle,
    /// Walk one fixed random cycle over all position pairs, continuing from
    /// the next slot after an accepted move instead of restarting.
    ContinueScan,
}

/// Parameters of a single local-search run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub n_vars: u32,
    pub criterion: Criterion,
    /// The run succeeds as soon as the incumbent reaches this non-linearity.
    pub target_nl: u32,
    /// Maximum number of spectrum evaluations, initial transform included.
    pub eval_budget: u64,
    pub seed: u64,
    pub order: NeighborOrder,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_vars < 1 {
            return Err(Error::InvalidParameter(
                "a Boolean function needs at least one variable".into(),
            ));
        }
        if self.eval_budget < 1 {
            return Err(Error::InvalidParameter(
                "the evaluation budget must be at least 1".into(),
            ));
        }
        let max_nl = 1u32 << (self.n_vars - 1);
        if self.target_nl > max_nl {
            return Err(Error::InvalidParameter(format!(
                "target non-linearity {} exceeds the ceiling {} for {} variables",
                self.target_nl, max_nl, self.n_vars
            )));
        }
        Ok(())
    }
}

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    /// The target non-linearity was reached.
    TargetReached,
    /// A full neighborhood pass produced no strict improvement.
    LocalOptimum,
    /// The evaluation budget ran out mid-search.
    BudgetExceeded,
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub status: RunStatus,
    pub evaluations_used: u64,
    pub final_nl: u32,
    pub final_table: TruthTable,
    /// The seed this run was executed with, for re-running it in isolation.
    pub seed: u64,
}

impl RunResult {
    pub fn is_success(&self) -> bool {
        self.status == RunStatus::TargetReached
    }
}

/// Aggregate over a batch of independent runs.
#[derive(Debug, Clone, PartialEq)]
pub struct BatchResult {
    pub runs: Vec<RunResult>,
    pub success_percent: f64,
    /// Five-number summary of `evaluations_used` over successful runs only;
    /// absent when no run succeeded.
    pub eval_stats: Option<SummaryStats>,
}

impl BatchResult {
    /// Evaluation counts of the successful runs, in run order.
    pub fn successful_evaluations(&self) -> Vec<f64> {
        self.runs
            .iter()
            .filter(|r| r.is_success())
            .map(|r| r.evaluations_used as f64)
            .collect()
    }
}

/// SplitMix64-style mixing of a master seed and a run index, so that any
/// individual run of a batch can be reproduced on its own.
pub fn derive_run_seed(master_seed: u64, run_index: u64) -> u64 {
    let mut z = master_seed.wrapping_add(run_index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs the first-improvement local search described by `config`.
///
/// Starting from a uniformly random balanced table, the single-swap neighbors
/// of the incumbent are enumerated in a fresh uniformly random order; the
/// first neighbor strictly preferred under the configured criterion is
/// accepted immediately and enumeration restarts from the new incumbent.
pub fn first_improvement_ls(config: &SearchConfig) -> Result<RunResult> {
    run_with_observer(config, |_| {})
}

pub(crate) fn run_with_observer(
    config: &SearchConfig,
    mut on_accept: impl FnMut(&WalshSpectrum),
) -> Result<RunResult> {
    config.validate()?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let table = TruthTable::random_balanced(config.n_vars, &mut rng)?;
    let spectrum = fwht(&table);
    on_accept(&spectrum);

    let mut state = RunState {
        criterion: config.criterion,
        target_nl: config.target_nl,
        eval_budget: config.eval_budget,
        candidate: spectrum.clone(),
        table,
        spectrum,
        evaluations: 1,
    };

    if state.spectrum.nonlinearity() >= config.target_nl {
        return Ok(state.finish(RunStatus::TargetReached, config.seed));
    }
    let status = match config.order {
        NeighborOrder::FreshShuffle => state.drive_fresh_shuffle(&mut rng, &mut on_accept)?,
        NeighborOrder::ContinueScan => state.drive_continue_scan(&mut rng, &mut on_accept)?,
    };
    Ok(state.finish(status, config.seed))
}

struct RunState {
    criterion: Criterion,
    target_nl: u32,
    eval_budget: u64,
    table: TruthTable,
    spectrum: WalshSpectrum,
    candidate: WalshSpectrum,
    evaluations: u64,
}

enum Step {
    OutOfBudget,
    Rejected,
    Accepted { target_reached: bool },
}

impl RunState {
    /// Evaluates the swap of positions `i` and `j` against the incumbent,
    /// accepting it when strictly preferred under the criterion.
    fn try_swap(
        &mut self,
        i: usize,
        j: usize,
        on_accept: &mut impl FnMut(&WalshSpectrum),
    ) -> Result<Step> {
        if self.evaluations == self.eval_budget {
            return Ok(Step::OutOfBudget);
        }
        self.spectrum
            .update_after_swap_into(&self.table, i, j, &mut self.candidate)?;
        self.evaluations += 1;
        if !accepts(self.criterion, &self.candidate, &self.spectrum)? {
            return Ok(Step::Rejected);
        }
        self.table = self.table.with_swapped(i, j);
        std::mem::swap(&mut self.spectrum, &mut self.candidate);
        debug_assert!(self.table.is_balanced());
        on_accept(&self.spectrum);
        Ok(Step::Accepted {
            target_reached: self.spectrum.nonlinearity() >= self.target_nl,
        })
    }

    fn finish(self, status: RunStatus, seed: u64) -> RunResult {
        RunResult {
            status,
            evaluations_used: self.evaluations,
            final_nl: self.spectrum.nonlinearity(),
            final_table: self.table,
            seed,
        }
    }

    /// Restarting enumeration: each pass examines all (one, zero) position
    /// pairs of the current incumbent in a freshly shuffled order; a full
    /// pass without improvement certifies a local optimum.
    fn drive_fresh_shuffle(
        &mut self,
        rng: &mut ChaCha12Rng,
        on_accept: &mut impl FnMut(&WalshSpectrum),
    ) -> Result<RunStatus> {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        loop {
            pairs.clear();
            let ones = self.table.one_positions();
            let zeros = self.table.zero_positions();
            pairs.reserve(ones.len() * zeros.len());
            for &i in &ones {
                for &j in &zeros {
                    pairs.push((i as u32, j as u32));
                }
            }
            pairs.shuffle(rng);

            let mut improved = false;
            for idx in 0..pairs.len() {
                let (i, j) = (pairs[idx].0 as usize, pairs[idx].1 as usize);
                match self.try_swap(i, j, on_accept)? {
                    Step::OutOfBudget => return Ok(RunStatus::BudgetExceeded),
                    Step::Rejected => {}
                    Step::Accepted { target_reached: true } => return Ok(RunStatus::TargetReached),
                    Step::Accepted { target_reached: false } => {
                        improved = true;
                        break;
                    }
                }
            }
            if !improved {
                return Ok(RunStatus::LocalOptimum);
            }
        }
    }

    /// Circular enumeration: one fixed random cycle over all position pairs;
    /// a pair is a neighbor whenever its bits currently differ. After an
    /// accepted move the scan continues from the next slot. Visiting every
    /// slot without an acceptance certifies a local optimum.
    fn drive_continue_scan(
        &mut self,
        rng: &mut ChaCha12Rng,
        on_accept: &mut impl FnMut(&WalshSpectrum),
    ) -> Result<RunStatus> {
        let len = self.table.len();
        let mut slots: Vec<(u32, u32)> = Vec::with_capacity(len * (len - 1) / 2);
        for i in 0..len {
            for j in i + 1..len {
                slots.push((i as u32, j as u32));
            }
        }
        slots.shuffle(rng);

        let mut cursor = 0usize;
        let mut since_accept = 0usize;
        loop {
            if since_accept == slots.len() {
                return Ok(RunStatus::LocalOptimum);
            }
            let (i, j) = (slots[cursor].0 as usize, slots[cursor].1 as usize);
            cursor = (cursor + 1) % slots.len();
            since_accept += 1;
            if self.table.bit(i) == self.table.bit(j) {
                continue;
            }
            match self.try_swap(i, j, on_accept)? {
                Step::OutOfBudget => return Ok(RunStatus::BudgetExceeded),
                Step::Rejected => {}
                Step::Accepted { target_reached: true } => return Ok(RunStatus::TargetReached),
                Step::Accepted { target_reached: false } => since_accept = 0,
            }
        }
    }
}

fn accepts(criterion: Criterion, candidate: &WalshSpectrum, incumbent: &WalshSpectrum) -> Result<bool> {
    Ok(match criterion {
        Criterion::Fit1 => fitness1(candidate) > fitness1(incumbent),
        Criterion::Fit2 => fitness2(candidate) > fitness2(incumbent),
        Criterion::Hist => is_strict_improvement(candidate, incumbent)?,
    })
}

/// Executes `n_runs` independent runs with per-run seeds derived from
/// `config.seed` and the run index. Runs execute in parallel; results are
/// keyed by run index, so the outcome is independent of scheduling.
pub fn run_batch(config: &SearchConfig, n_runs: usize) -> Result<BatchResult> {
    if n_runs < 1 {
        return Err(Error::InvalidParameter("a batch needs at least one run".into()));
    }
    config.validate()?;
    let runs: Vec<RunResult> = (0..n_runs)
        .into_par_iter()
        .map(|index| {
            let run_config = SearchConfig {
                seed: derive_run_seed(config.seed, index as u64),
                ..*config
            };
            first_improvement_ls(&run_config)
        })
        .collect::<Result<_>>()?;

    let successes = runs.iter().filter(|r| r.is_success()).count();
    let success_percent = 100.0 * successes as f64 / n_runs as f64;
    let successful: Vec<f64> = runs
        .iter()
        .filter(|r| r.is_success())
        .map(|r| r.evaluations_used as f64)
        .collect();
    let eval_stats = if successful.is_empty() {
        None
    } else {
        Some(summary(&successful)?)
    };
    Ok(BatchResult {
        runs,
        success_percent,
        eval_stats,
    })
}

/// One line of the JSON-lines run log.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub run_index: usize,
    pub seed: u64,
    pub status: RunStatus,
    pub evaluations: u64,
    pub final_nl: u32,
    /// Hex rendering of the final table (binary for one-variable tables,
    /// which are too short for hex).
    pub final_table_hex: String,
}

impl RunRecord {
    pub fn new(run_index: usize, result: &RunResult) -> Self {
        let final_table_hex = result
            .final_table
            .to_hex_string()
            .unwrap_or_else(|_| result.final_table.to_binary_string());
        Self {
            run_index,
            seed: result.seed,
            status: result.status,
            evaluations: result.evaluations_used,
            final_nl: result.final_nl,
            final_table_hex,
        }
    }
}

/// Closing summary line of the JSON-lines run log.
#[derive(Debug, Clone, Serialize)]
pub struct BatchSummaryRecord {
    pub runs: usize,
    pub successes: usize,
    pub success_percent: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<SummaryStats>,
}

impl BatchSummaryRecord {
    pub fn new(batch: &BatchResult) -> Self {
        Self {
            runs: batch.runs.len(),
            successes: batch.runs.iter().filter(|r| r.is_success()).count(),
            success_percent: batch.success_percent,
            evaluations: batch.eval_stats,
        }
    }
}
