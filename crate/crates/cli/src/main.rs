use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use pbw_cli::{run_source, CliError, Flags};
use pbw_core::modfilt::DEFAULT_MAX_STEPS;

/// Gröbner bases and weight filtrations over PBW-reduction algebras.
#[derive(Parser, Debug)]
#[command(name = "pbw", version)]
struct Args {
    /// Problem file (TOML).
    file: PathBuf,
    /// Run the consistency falsifiers on the algebra up to this degree.
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Number of filtration indices tried by `vfiltration`.
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_k: usize,
    /// Cross-check against truncated linear algebra up to this degree.
    #[arg(long, value_name = "D")]
    oracle_check: Option<u32>,
    /// Compute reduced Gröbner bases.
    #[arg(long)]
    reduced: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let flags = Flags { degree_bound: args.degree_bound, max_k: args.max_k, oracle_check: args.oracle_check, reduced: args.reduced };
    let outcome = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Syntax(format!("{}: {e}", args.file.display())))
        .and_then(|src| run_source(&src, &flags));
    match outcome {
        Ok(doc) => {
            print!("{doc}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {e}", args.file.display());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
