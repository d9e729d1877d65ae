//! `pancake`: generate instances, compute maximum cliques, inspect line
//! transversals and split pseudo-disk families into two cliques.
//!
//! Exit codes: 0 success, 2 usage or malformed input, 3 internal failure
//! or exceeded limits (including degenerate instances), 4 a verification
//! finding (the output file is still written).

mod bench;
mod commands;
mod error;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub use error::CliError;

/// Environment variable overriding the predicate tolerance.
pub const EPS_ENV: &str = "PANCAKE_EPS";

#[derive(Parser)]
#[command(name = "pancake", version, about = "Maximum cliques in unit disk and 2-pancake graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random instance.
    Gen(commands::GenArgs),
    /// Compute a maximum clique.
    Solve(commands::SolveArgs),
    /// Sweep the line transversals of a pseudo-disk triple.
    Transversal(commands::TransversalArgs),
    /// Split a pseudo-disk family into two cliques.
    Partition(commands::PartitionArgs),
    /// Time the solvers on generated instances and write CSV.
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are successes
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => commands::gen(a),
        Command::Solve(a) => commands::solve(a),
        Command::Transversal(a) => commands::transversal(a),
        Command::Partition(a) => commands::partition(a),
        Command::Bench(a) => bench::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pancake: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
