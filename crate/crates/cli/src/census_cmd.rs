//! `census`: exhaustive non-linearity distribution over all balanced tables
//! at small sizes, printed as JSON.

use clap::Args;
use nlsearch_core::census;

use crate::output::{CmdError, CmdResult};

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Number of input variables (at most 4).
    #[arg(long = "n", value_name = "N")]
    pub n_vars: u32,
}

pub fn run(args: CensusArgs) -> CmdResult {
    let report = census(args.n_vars).map_err(|e| CmdError::Usage(e.to_string()))?;
    let json = serde_json::to_string(&report)
        .map_err(|e| CmdError::Runtime(format!("serialization failed: {e}")))?;
    println!("{json}");
    Ok(())
}
