//! `wht`: print the spectrum, non-linearity, and magnitude histogram of one
//! truth table.

use clap::Args;
use nlsearch_core::{fwht, TableFormat, TruthTable};

use crate::output::{CmdError, CmdResult};

#[derive(Debug, Args)]
pub struct WhtArgs {
    /// Truth table, as a binary or hex string (index 0 first).
    #[arg(long)]
    pub table: String,

    /// How to read --table. `auto` treats a power-of-two-length string of
    /// zeros and ones as binary, anything else as hex.
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormatArg {
    Auto,
    Binary,
    Hex,
}

pub fn parse_table(text: &str, format: FormatArg) -> CmdResult<TruthTable> {
    let format = match format {
        FormatArg::Binary => TableFormat::Binary,
        FormatArg::Hex => TableFormat::Hex,
        FormatArg::Auto => {
            let looks_binary =
                text.len() >= 2 && text.len().is_power_of_two() && text.bytes().all(|b| b == b'0' || b == b'1');
            if looks_binary {
                TableFormat::Binary
            } else {
                TableFormat::Hex
            }
        }
    };
    TruthTable::parse(text, format).map_err(|e| CmdError::Usage(e.to_string()))
}

pub fn run(args: WhtArgs) -> CmdResult {
    let table = parse_table(&args.table, args.format)?;
    let spectrum = fwht(&table);
    let coefficients: Vec<String> = spectrum.coeffs().iter().map(|c| c.to_string()).collect();
    println!("coefficients: {}", coefficients.join(" "));
    println!("nl: {}", spectrum.nonlinearity());
    let histogram: Vec<String> = spectrum
        .histogram()
        .counts()
        .iter()
        .rev()
        .map(|(value, count)| format!("{value}:{count}"))
        .collect();
    println!("histogram: {}", histogram.join(" "));
    Ok(())
}
