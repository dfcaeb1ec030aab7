//! Problem-file frontend for `pbw-core`.

pub mod problem;
pub mod run;

pub use problem::{Problem, ProblemFile, Task};
pub use run::{run, CliError, Document, Flags};

/// Reads, validates and runs a problem file; returns the result document as
/// pretty-printed JSON.
pub fn run_source(src: &str, flags: &Flags) -> Result<String, CliError> {
    let file = ProblemFile::from_toml(src).map_err(|e| CliError::Syntax(e.to_string()))?;
    let problem = Problem::build(&file)?;
    let doc = run(&problem, flags)?;
    Ok(serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n")
}
