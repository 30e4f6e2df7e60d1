use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use upkernel::Oracle;
use upkernel_cli::campaign::Suite;
use upkernel_cli::commands::{self, Family, Outcome};
use upkernel_cli::CliResult;

/// Up-color kernels in vertex-colored digraphs.
///
/// Exit status: 0 affirmative, 1 negative, 2 usage or input error.
#[derive(Parser)]
#[command(name = "upkernel", version)]
struct Cli {
    /// Largest digraph the exhaustive oracle accepts (at most 64).
    #[arg(long, global = true, env = "UPKERNEL_ORACLE_LIMIT", default_value_t = upkernel::oracle::DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a vertex set is an up-color kernel.
    Check {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// List every up-color kernel.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Build the digraph a recipe describes.
    Build {
        recipe: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the structural decider for a digraph family.
    Decide {
        file: PathBuf,
        #[arg(long, value_enum)]
        family: Family,
        /// Pendant vertex ids, for `--family pendant`.
        #[arg(long)]
        pendants: Option<String>,
    },
    /// Run a seeded verification campaign.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Instances per property; each suite has its own default.
        #[arg(long)]
        samples: Option<usize>,
        /// Largest random instance, where the suite draws digraph orders.
        #[arg(long)]
        max_order: Option<usize>,
        /// Where the first counterexample goes when a property fails.
        #[arg(long, default_value = "counterexample.json")]
        counterexample: PathBuf,
    },
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let oracle = Oracle::new(cli.oracle_limit);
    match cli.command {
        Command::Check { file, set } => commands::check(&file, &set),
        Command::Enumerate { file, count_only } => commands::enumerate(&oracle, &file, count_only),
        Command::Build { recipe, out } => commands::build(&recipe, out.as_deref()),
        Command::Decide { file, family, pendants } => commands::decide(&oracle, &file, family, pendants.as_deref()),
        Command::Verify { suite, seed, samples, max_order, counterexample } => {
            commands::verify(suite, seed, samples, max_order, &counterexample)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            for line in &outcome.lines {
                println!("{line}");
            }
            ExitCode::from(if outcome.affirmative { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
