//! `mutation-analysis`: sample random balanced tables, mutate each a few
//! times, and correlate parent and neighbor non-linearity per operator.

use std::path::PathBuf;

use clap::Args;
use nlsearch_core::{
    derive_run_seed, fwht, pearson, spearman, Error as CoreError, MutationKind, TruthTable,
};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::defaults;
use crate::output::{CmdError, CmdResult, JsonlSink};

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    /// Number of input variables.
    #[arg(long = "n", value_name = "N", default_value_t = defaults::ANALYSIS_N_VARS)]
    pub n_vars: u32,

    /// Number of sampled parent tables per operator.
    #[arg(long, default_value_t = defaults::ANALYSIS_SAMPLES)]
    pub samples: u64,

    /// Neighbors generated per sampled parent.
    #[arg(long, default_value_t = defaults::ANALYSIS_NEIGHBORS)]
    pub neighbors: u32,

    /// Operators to analyze (swap[:k], shift, inversion, permutation);
    /// repeat the flag for several. Defaults to the full set.
    #[arg(long = "mutation", value_name = "KIND")]
    pub mutations: Vec<String>,

    /// Master seed; per-sample seeds are derived from it.
    #[arg(long, env = "NLSEARCH_SEED", default_value_t = defaults::SEED)]
    pub seed: u64,

    /// Write per-operator JSONL records here as well.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MutationCorrelation {
    pub mutation: String,
    pub spearman: f64,
    pub pearson: f64,
    pub n_pairs: usize,
}

fn default_kinds() -> Vec<MutationKind> {
    vec![
        MutationKind::Swap(1),
        MutationKind::Swap(2),
        MutationKind::Swap(3),
        MutationKind::CyclicShift,
        MutationKind::Inversion,
        MutationKind::Permutation,
    ]
}

pub fn correlation_study(
    n_vars: u32,
    samples: u64,
    neighbors: u32,
    kinds: &[MutationKind],
    seed: u64,
) -> Result<Vec<MutationCorrelation>, CoreError> {
    use rand::SeedableRng;
    let mut results = Vec::with_capacity(kinds.len());
    for (kind_index, &kind) in kinds.iter().enumerate() {
        let kind_seed = derive_run_seed(seed, kind_index as u64);
        let pairs: Vec<(f64, f64)> = (0..samples)
            .into_par_iter()
            .map(|sample| {
                let mut rng =
                    ChaCha12Rng::seed_from_u64(derive_run_seed(kind_seed, sample));
                let parent = TruthTable::random_balanced(n_vars, &mut rng)?;
                let parent_nl = fwht(&parent).nonlinearity() as f64;
                (0..neighbors)
                    .map(|_| {
                        let neighbor = kind.apply(&parent, &mut rng)?;
                        Ok((parent_nl, fwht(&neighbor).nonlinearity() as f64))
                    })
                    .collect::<Result<Vec<_>, CoreError>>()
            })
            .collect::<Result<Vec<_>, CoreError>>()?
            .into_iter()
            .flatten()
            .collect();
        let xs: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let ys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        results.push(MutationCorrelation {
            mutation: kind.to_string(),
            spearman: spearman(&xs, &ys)?,
            pearson: pearson(&xs, &ys)?,
            n_pairs: pairs.len(),
        });
    }
    Ok(results)
}

pub fn run(args: AnalysisArgs) -> CmdResult {
    let kinds: Vec<MutationKind> = if args.mutations.is_empty() {
        default_kinds()
    } else {
        args.mutations
            .iter()
            .map(|text| text.parse::<MutationKind>())
            .collect::<Result<_, _>>()
            .map_err(|e: CoreError| CmdError::Usage(e.to_string()))?
    };
    if args.samples < 2 || args.neighbors < 1 {
        return Err(CmdError::Usage(
            "need at least 2 samples and 1 neighbor per sample".into(),
        ));
    }
    let results = correlation_study(args.n_vars, args.samples, args.neighbors, &kinds, args.seed)?;

    println!("{:<13} {:>9} {:>9} {:>7}", "mutation", "spearman", "pearson", "pairs");
    for row in &results {
        println!(
            "{:<13} {:>9.4} {:>9.4} {:>7}",
            row.mutation, row.spearman, row.pearson, row.n_pairs
        );
    }
    if let Some(path) = &args.out {
        let mut sink = JsonlSink::create(Some(path))?;
        for row in &results {
            sink.write(row)?;
        }
        sink.finish()?;
    }
    Ok(())
}
