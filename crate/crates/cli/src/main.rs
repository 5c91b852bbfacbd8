use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use nullsteer_cli::run::{execute, RunOptions};
use nullsteer_cli::scenario::parse_scenario;

/// Beampattern nulling for a radar sharing spectrum with cellular uplinks:
/// evaluates the null-space-projected pattern over an angle grid, reports
/// per-sector suppression, and accounts for the lost search volume.
#[derive(Parser)]
#[command(name = "nullsteer", version)]
struct Args {
    /// Scenario file to run
    #[arg(long, value_name = "path")]
    scenario: PathBuf,

    /// Directory receiving beampattern.csv, summary.json, and search.csv
    #[arg(long, value_name = "path", default_value = "./out")]
    out_dir: PathBuf,

    /// Skip the null-space projection (both projectors become the identity)
    #[arg(long)]
    no_nsp: bool,

    /// Override the scenario's relative singular-value tolerance
    #[arg(long, value_name = "real")]
    tol: Option<f64>,

    /// Suppress console output
    #[arg(long)]
    quiet: bool,
}

// Exit codes: 0 success, 2 scenario or flag problem, 3 numerical failure,
// 4 I/O failure. Flag syntax errors exit through clap, which also uses 2.
fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(tol) = args.tol {
        if !tol.is_finite() || tol < 0.0 {
            eprintln!("error: --tol must be a finite non-negative real, got {tol}");
            return ExitCode::from(2);
        }
    }
    let text = match std::fs::read_to_string(&args.scenario) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.scenario.display());
            return ExitCode::from(4);
        }
    };
    let scenario = match parse_scenario(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", args.scenario.display());
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions {
        out_dir: args.out_dir,
        no_nsp: args.no_nsp,
        tol_override: args.tol,
        quiet: args.quiet,
    };
    match execute(&scenario, &opts) {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
