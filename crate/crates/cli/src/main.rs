//! Command-line harness for searching balanced Boolean functions with high
//! non-linearity.

mod census_cmd;
mod compare;
mod defaults;
mod mutation_analysis;
mod output;
mod search_cmd;
mod wht_cmd;

use clap::{Parser, Subcommand};

use crate::output::CmdResult;

#[derive(Debug, Parser)]
#[command(
    name = "nlsearch",
    about = "Local search for perfectly balanced Boolean functions with high non-linearity",
    version
)]
struct Cli {
    /// Cap the number of worker threads used for parallel runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a batch of local-search runs and log them as JSON lines.
    Search(search_cmd::SearchArgs),
    /// Run both acceptance criteria on paired starts and compare them.
    Compare(compare::CompareArgs),
    /// Correlate parent and neighbor non-linearity per mutation operator.
    MutationAnalysis(mutation_analysis::AnalysisArgs),
    /// Print the spectrum, non-linearity, and histogram of one table.
    Wht(wht_cmd::WhtArgs),
    /// Enumerate every balanced function at small sizes and report the
    /// non-linearity distribution.
    Census(census_cmd::CensusArgs),
}

fn dispatch(cli: Cli) -> CmdResult {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| output::CmdError::Usage(format!("bad --jobs value: {e}")))?;
    }
    match cli.command {
        Command::Search(args) => search_cmd::run(args),
        Command::Compare(args) => compare::run(args),
        Command::MutationAnalysis(args) => mutation_analysis::run(args),
        Command::Wht(args) => wht_cmd::run(args),
        Command::Census(args) => census_cmd::run(args),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = dispatch(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
