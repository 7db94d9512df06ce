//! `compare`: run the histogram-criterion and penalized-fitness variants on
//! the same problem and report summary tables plus significance tests.

use std::path::PathBuf;

use clap::Args;
use nlsearch_core::{
    derive_run_seed, fisher_exact, mann_whitney_u, run_batch, Alternative, BatchResult,
    BatchSummaryRecord, ContingencyTable2x2, Criterion, Error as CoreError, RunRecord,
    SearchConfig,
};
use serde::Serialize;

use crate::defaults;
use crate::output::{CmdResult, JsonlSink};
use crate::search_cmd::resolve_target;

/// Seed-space offset separating the second variant's runs in unpaired mode.
const UNPAIRED_STREAM: u64 = 0x636f_6d70_6172_65;

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Number of input variables.
    #[arg(long = "n", value_name = "N")]
    pub n_vars: u32,

    /// Target non-linearity (defaults to the documented value for 6 <= n <= 9).
    #[arg(long)]
    pub target: Option<u32>,

    /// Runs per variant.
    #[arg(long)]
    pub runs: Option<usize>,

    /// Evaluation budget per run.
    #[arg(long, default_value_t = defaults::EVAL_BUDGET)]
    pub budget: u64,

    /// Master seed; per-run seeds are derived from it.
    #[arg(long, env = "NLSEARCH_SEED", default_value_t = defaults::SEED)]
    pub seed: u64,

    /// Draw independent starting tables for the two variants instead of
    /// pairing run i of each variant on the same start.
    #[arg(long)]
    pub unpaired: bool,

    /// Write the full JSONL report (runs, summaries, percentiles, tests) here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// One significance test in the report.
#[derive(Debug, Clone, Serialize)]
pub struct TestRecord {
    pub test: &'static str,
    pub statistic: Option<f64>,
    pub p_value: Option<f64>,
    pub alternative: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_applicable: Option<String>,
}

pub struct CompareOutcome {
    pub histfit: BatchResult,
    pub fit2: BatchResult,
    pub fisher: TestRecord,
    pub mwu: TestRecord,
}

/// Runs both variants. In paired mode they share per-run seeds, so run i of
/// each variant starts from the identical random table.
pub fn compare_experiment(
    n_vars: u32,
    target_nl: u32,
    runs: usize,
    eval_budget: u64,
    seed: u64,
    paired: bool,
) -> Result<CompareOutcome, CoreError> {
    let histfit_seed = seed;
    let fit2_seed = if paired {
        seed
    } else {
        derive_run_seed(seed, UNPAIRED_STREAM)
    };
    let config = |criterion, seed| SearchConfig {
        n_vars,
        criterion,
        target_nl,
        eval_budget,
        seed,
        order: Default::default(),
    };
    let histfit = run_batch(&config(Criterion::Hist, histfit_seed), runs)?;
    let fit2 = run_batch(&config(Criterion::Fit2, fit2_seed), runs)?;

    // Success proportions: does the histogram criterion succeed more often?
    let successes = |b: &BatchResult| b.runs.iter().filter(|r| r.is_success()).count() as u64;
    let table = ContingencyTable2x2 {
        a: successes(&fit2),
        b: runs as u64 - successes(&fit2),
        c: successes(&histfit),
        d: runs as u64 - successes(&histfit),
    };
    let fisher = match fisher_exact(table, Alternative::TwoSided) {
        Ok(p) => {
            let odds = (table.a * table.d) as f64 / (table.b * table.c) as f64;
            TestRecord {
                test: "fisher_exact",
                statistic: odds.is_finite().then_some(odds),
                p_value: Some(p),
                alternative: "two-sided",
                not_applicable: None,
            }
        }
        Err(e) => TestRecord {
            test: "fisher_exact",
            statistic: None,
            p_value: None,
            alternative: "two-sided",
            not_applicable: Some(e.to_string()),
        },
    };

    // Evaluation counts over successful runs: stochastically smaller under
    // the histogram criterion?
    let mwu = match mann_whitney_u(
        &histfit.successful_evaluations(),
        &fit2.successful_evaluations(),
        Alternative::Less,
    ) {
        Ok(result) => TestRecord {
            test: "mann_whitney_u",
            statistic: Some(result.u),
            p_value: Some(result.p_value),
            alternative: "less",
            not_applicable: None,
        },
        Err(e) => TestRecord {
            test: "mann_whitney_u",
            statistic: None,
            p_value: None,
            alternative: "less",
            not_applicable: Some(e.to_string()),
        },
    };

    Ok(CompareOutcome {
        histfit,
        fit2,
        fisher,
        mwu,
    })
}

/// Evaluation-count percentiles of the successful runs (linear
/// interpolation), the raw material behind convergence box plots.
#[derive(Debug, Clone, Serialize)]
struct PercentileRecord {
    record: &'static str,
    variant: &'static str,
    successes: usize,
    p5: Option<f64>,
    p25: Option<f64>,
    p50: Option<f64>,
    p75: Option<f64>,
    p95: Option<f64>,
}

fn percentile(sorted: &[f64], q: f64) -> Option<f64> {
    if sorted.is_empty() {
        return None;
    }
    let rank = q / 100.0 * (sorted.len() - 1) as f64;
    let lo = rank.floor() as usize;
    let hi = rank.ceil() as usize;
    let frac = rank - lo as f64;
    Some(sorted[lo] + (sorted[hi] - sorted[lo]) * frac)
}

fn percentile_record(variant: &'static str, batch: &BatchResult) -> PercentileRecord {
    let mut evals = batch.successful_evaluations();
    evals.sort_by(f64::total_cmp);
    PercentileRecord {
        record: "percentiles",
        variant,
        successes: evals.len(),
        p5: percentile(&evals, 5.0),
        p25: percentile(&evals, 25.0),
        p50: percentile(&evals, 50.0),
        p75: percentile(&evals, 75.0),
        p95: percentile(&evals, 95.0),
    }
}

fn summary_row(name: &str, n_vars: u32, batch: &BatchResult) -> String {
    match &batch.eval_stats {
        Some(s) => format!(
            "{name:<12} {n_vars:>2} {runs:>6} {success:>9.1} {mean:>11.2} {std:>10.2} {median:>10.1} {min:>8.0} {max:>8.0}",
            runs = batch.runs.len(),
            success = batch.success_percent,
            mean = s.mean,
            std = s.std,
            median = s.median,
            min = s.min,
            max = s.max,
        ),
        None => format!(
            "{name:<12} {n_vars:>2} {runs:>6} {success:>9.1} {dash:>11} {dash:>10} {dash:>10} {dash:>8} {dash:>8}",
            runs = batch.runs.len(),
            success = batch.success_percent,
            dash = "-",
        ),
    }
}

fn render_test(test: &TestRecord) -> String {
    match (&test.not_applicable, test.p_value) {
        (Some(reason), _) => format!("{} ({}): not applicable: {reason}", test.test, test.alternative),
        (None, Some(p)) => match test.statistic {
            Some(stat) => format!(
                "{} ({}): statistic = {stat:.4}, p = {p:.4e}",
                test.test, test.alternative
            ),
            None => format!("{} ({}): p = {p:.4e}", test.test, test.alternative),
        },
        (None, None) => format!("{} ({}): not applicable", test.test, test.alternative),
    }
}

#[derive(Serialize)]
struct VariantRunRecord<'a> {
    record: &'static str,
    variant: &'static str,
    #[serde(flatten)]
    run: &'a RunRecord,
}

#[derive(Serialize)]
struct VariantSummaryRecord {
    record: &'static str,
    variant: &'static str,
    #[serde(flatten)]
    summary: BatchSummaryRecord,
}

#[derive(Serialize)]
struct VariantTestRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    test: &'a TestRecord,
}

pub fn run(args: CompareArgs) -> CmdResult {
    let target = resolve_target(args.n_vars, args.target)?;
    let runs = args.runs.unwrap_or_else(|| defaults::runs_for(args.n_vars));
    let outcome = compare_experiment(
        args.n_vars,
        target,
        runs,
        args.budget,
        args.seed,
        !args.unpaired,
    )?;

    println!(
        "{:<12} {:>2} {:>6} {:>9} {:>11} {:>10} {:>10} {:>8} {:>8}",
        "variant", "n", "runs", "success%", "mean", "std", "median", "min", "max"
    );
    println!("{}", summary_row("LS-FIT2", args.n_vars, &outcome.fit2));
    println!("{}", summary_row("LS-HISTFIT", args.n_vars, &outcome.histfit));
    println!();
    println!("{}", render_test(&outcome.fisher));
    println!("{}", render_test(&outcome.mwu));
    println!();
    println!("{}", serde_json::to_string(&outcome.fisher).unwrap());
    println!("{}", serde_json::to_string(&outcome.mwu).unwrap());

    if let Some(path) = &args.out {
        let mut sink = JsonlSink::create(Some(path))?;
        for (variant, batch) in [("ls-histfit", &outcome.histfit), ("ls-fit2", &outcome.fit2)] {
            for (index, result) in batch.runs.iter().enumerate() {
                sink.write(&VariantRunRecord {
                    record: "run",
                    variant,
                    run: &RunRecord::new(index, result),
                })?;
            }
        }
        for (variant, batch) in [("ls-histfit", &outcome.histfit), ("ls-fit2", &outcome.fit2)] {
            sink.write(&VariantSummaryRecord {
                record: "summary",
                variant,
                summary: BatchSummaryRecord::new(batch),
            })?;
            sink.write(&percentile_record(variant, batch))?;
        }
        for test in [&outcome.fisher, &outcome.mwu] {
            sink.write(&VariantTestRecord { record: "test", test })?;
        }
        sink.finish()?;
    }
    Ok(())
}
