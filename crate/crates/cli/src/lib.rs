//! Command implementations for the `clique-splitter` binary.
//!
//! Every command writes its primary output to the supplied writer and
//! returns an exit code, so tests can drive it without spawning processes.

pub mod args;
mod commands;
pub mod error;
mod probe;
pub mod report;

pub use args::Cli;
pub use commands::{load_graph, parse_quotas};
pub use error::{exit, CliError};

use clap::Parser;
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;

/// Parses `argv` and runs the command; returns the process exit code.
pub fn run_from<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::IO } else { exit::OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    run(cli, out, err)
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    use args::Command;
    let (json_errors, result) = match cli.command {
        Command::Partition(a) => (a.json, commands::partition(&a, out)),
        Command::Verify(a) => (a.json, commands::verify(&a, out)),
        Command::Gen(a) => (a.json, commands::gen(&a, out, err)),
        Command::Probe(a) => (false, probe::probe(&a, out, err)),
        Command::Stats(a) => (a.json, commands::stats(&a, out)),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Exhausted { diagnostics, .. } = &e {
                for d in diagnostics {
                    let _ = writeln!(err, "  {}: {}", d.strategy, d.outcome);
                }
            }
            if json_errors {
                let _ = writeln!(out, "{}", error_json(&e));
            }
            e.exit_code()
        }
    }
}

fn error_json(e: &CliError) -> serde_json::Value {
    match e {
        CliError::Precondition { reason, witness } => json!({
            "error": "precondition", "message": reason, "witness": witness
        }),
        CliError::Exhausted {
            depth,
            diagnostics,
            proven_infeasible,
        } => json!({
            "error": "exhausted", "depth": depth, "diagnostics": diagnostics,
            "proven_infeasible": proven_infeasible
        }),
        CliError::Invalid => json!({"error": "invalid"}),
        other => json!({"error": "input", "message": other.to_string()}),
    }
}
