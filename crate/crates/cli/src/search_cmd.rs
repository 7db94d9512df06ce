//! `search`: run one batch of local-search runs and log it as JSON lines.

use std::path::PathBuf;

use clap::Args;
use nlsearch_core::{run_batch, BatchSummaryRecord, RunRecord, SearchConfig};

use crate::defaults;
use crate::output::{CmdError, CmdResult, JsonlSink};

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Number of input variables.
    #[arg(long = "n", value_name = "N")]
    pub n_vars: u32,

    /// Acceptance criterion.
    #[arg(long, value_enum, default_value_t = CriterionArg::Hist)]
    pub criterion: CriterionArg,

    /// Target non-linearity (defaults to the documented value for 6 <= n <= 9).
    #[arg(long)]
    pub target: Option<u32>,

    /// Number of runs.
    #[arg(long)]
    pub runs: Option<usize>,

    /// Evaluation budget per run.
    #[arg(long, default_value_t = defaults::EVAL_BUDGET)]
    pub budget: u64,

    /// Master seed; per-run seeds are derived from it.
    #[arg(long, env = "NLSEARCH_SEED", default_value_t = defaults::SEED)]
    pub seed: u64,

    /// Write the JSONL log here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CriterionArg {
    Fit1,
    Fit2,
    Hist,
}

impl From<CriterionArg> for nlsearch_core::Criterion {
    fn from(arg: CriterionArg) -> Self {
        match arg {
            CriterionArg::Fit1 => nlsearch_core::Criterion::Fit1,
            CriterionArg::Fit2 => nlsearch_core::Criterion::Fit2,
            CriterionArg::Hist => nlsearch_core::Criterion::Hist,
        }
    }
}

pub fn resolve_target(n_vars: u32, flag: Option<u32>) -> CmdResult<u32> {
    flag.or_else(|| defaults::target_nl_for(n_vars)).ok_or_else(|| {
        CmdError::Usage(format!(
            "no default target non-linearity for n = {n_vars}; pass --target"
        ))
    })
}

pub fn run(args: SearchArgs) -> CmdResult {
    let config = SearchConfig {
        n_vars: args.n_vars,
        criterion: args.criterion.into(),
        target_nl: resolve_target(args.n_vars, args.target)?,
        eval_budget: args.budget,
        seed: args.seed,
        order: Default::default(),
    };
    let n_runs = args.runs.unwrap_or_else(|| defaults::runs_for(args.n_vars));
    let batch = run_batch(&config, n_runs)?;

    let mut sink = JsonlSink::create(args.out.as_deref())?;
    for (index, result) in batch.runs.iter().enumerate() {
        sink.write(&RunRecord::new(index, result))?;
    }
    sink.write(&BatchSummaryRecord::new(&batch))?;
    sink.finish()
}
