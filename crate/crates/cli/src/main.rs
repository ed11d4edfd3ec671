//! `invseq`: enumeration, triangles, theorem checks and series identities
//! from the command line.
//!
//! Exit codes: 0 success, 1 a checked claim failed (or an internal
//! invariant broke), 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

use commands::{CliError, Outcome};

#[derive(Parser)]
#[command(
    name = "invseq",
    version,
    about = "Pattern-avoiding inversion sequences and permutations"
)]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the avoiders of a pattern set or relation triple, or tabulate
    /// statistics over them.
    Enumerate(commands::EnumerateArgs),
    /// Print a number triangle with its row sums.
    Triangle(commands::TriangleArgs),
    /// Verify a theorem exhaustively for every size up to --max-n.
    Check(commands::CheckArgs),
    /// Find the pairs of length-4 patterns whose avoiders refine the
    /// Schröder triangle by last entry.
    ScanSchroderPairs(commands::ScanArgs),
    /// Verify generating-function identities by exact truncated series.
    SeriesCheck(commands::SeriesArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too, with exit code 0
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match cli.command {
        Command::Enumerate(a) => commands::enumerate(&a),
        Command::Triangle(a) => commands::triangle(&a),
        Command::Check(a) => commands::check(&a),
        Command::ScanSchroderPairs(a) => commands::scan(&a),
        Command::SeriesCheck(a) => commands::series_check(&a),
    };
    let status = result.and_then(|o| emit(&o, cli.out.as_ref()).map(|()| o.ok));
    if let Err(e) = &status {
        eprintln!("error: {e}");
    }
    ExitCode::from(exit_code(&status))
}

/// Whether every checked claim held, or why the command could not run.
fn exit_code(status: &Result<bool, CliError>) -> u8 {
    match status {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => e.exit_code(),
    }
}

fn emit(o: &Outcome, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, &o.text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(o.text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}
