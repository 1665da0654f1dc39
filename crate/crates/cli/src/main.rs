//! Command-line front end: parse input files, dispatch computations, render
//! tables and posets, run the acceptance suite.
//!
//! Exit codes: 0 on success, 1 on domain errors (reported with the owning
//! module and variant name), 2 on usage errors.  Output for identical inputs
//! and flags is byte-identical across runs.

mod commands;
mod error;
mod inputs;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use error::CliError;
use render::Format;
use std::process::ExitCode;
use tambara::ideals::DEFAULT_COMBO_BOUND;

#[derive(Parser)]
#[command(
    name = "tambara",
    version,
    about = "Exact Nakaoka spectra of Tambara functors over finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a finite group and its subgroup lattice
    Group(GroupArgs),
    /// Table of marks and Burnside prime levels over a prime set
    Burnside(BurnsideArgs),
    /// Validate, describe, or generate Tambara functor files
    Functor(FunctorArgs),
    /// Enumerate, close, or primality-test Tambara ideals
    Ideals(IdealsArgs),
    /// Enumerate the prime spectrum of a functor
    Spec(SpecArgs),
    /// Stratify a spectrum by subgroup conjugacy classes
    Stratify(StratifyArgs),
    /// The ghost of a functor over a group of prime order
    Ghost(GhostArgs),
    /// Run the built-in acceptance suite
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
pub struct GroupArgs {
    /// Group file (JSON) or built-in name (C1.., V4, D3.., Q8.., S2..S4)
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args)]
pub struct BurnsideArgs {
    /// Group file (JSON) or built-in name
    #[arg(long)]
    pub group: String,
    /// Primes to truncate the spectrum at (0 is always included)
    #[arg(long, value_delimiter = ',', default_value = "0,2,3")]
    pub primes: Vec<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args)]
pub struct FunctorArgs {
    /// Tambara functor file (JSON)
    #[arg(long)]
    pub functor: Option<String>,
    /// Generate the fixed-point functor of a G-ring file
    #[arg(long, value_name = "GRING_FILE", conflicts_with_all = ["functor", "coind", "ghost"])]
    pub fp: Option<String>,
    /// Generate the coinduction of --functor to its full group
    #[arg(long)]
    pub coind: bool,
    /// Generate the ghost of --functor
    #[arg(long, conflicts_with = "coind")]
    pub ghost: bool,
    /// Write the result to a file instead of stdout
    #[arg(long, short)]
    pub output: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealAction {
    /// List every Tambara ideal
    Enumerate,
    /// Close a set of generators into a Tambara ideal
    Close,
    /// Primality-test the enumerated (or principal) ideals
    Prime,
}

#[derive(clap::Args)]
pub struct IdealsArgs {
    #[arg(value_enum)]
    pub action: IdealAction,
    /// Tambara functor file (JSON)
    #[arg(long)]
    pub functor: String,
    /// Candidate-combination bound for exhaustive enumeration
    #[arg(long, default_value_t = DEFAULT_COMBO_BOUND)]
    pub bound: u128,
    /// Generator for `close`, as LEVEL:ELEM indices (repeatable)
    #[arg(long = "generator", value_name = "LEVEL:ELEM")]
    pub generators: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args)]
pub struct SpecArgs {
    /// Tambara functor file (JSON)
    #[arg(long)]
    pub functor: String,
    /// Candidate-combination bound for exhaustive enumeration
    #[arg(long, default_value_t = DEFAULT_COMBO_BOUND)]
    pub bound: u128,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args)]
pub struct StratifyArgs {
    /// Stratify the truncated Burnside spectrum of --group
    #[arg(long)]
    pub burnside: bool,
    /// Group file (JSON) or built-in name (with --burnside)
    #[arg(long)]
    pub group: Option<String>,
    /// Primes to truncate the Burnside spectrum at (0 is always included)
    #[arg(long, value_delimiter = ',', default_value = "0,2,3")]
    pub primes: Vec<u64>,
    /// Tambara functor file (JSON), for enumerated spectra
    #[arg(long)]
    pub functor: Option<String>,
    /// Candidate-combination bound for exhaustive enumeration
    #[arg(long, default_value_t = DEFAULT_COMBO_BOUND)]
    pub bound: u128,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args)]
pub struct GhostArgs {
    /// Tambara functor file (JSON) over a group of prime order
    #[arg(long)]
    pub functor: String,
    /// Also compute the ghost spectrum and its bottom stratum
    #[arg(long)]
    pub stratify: bool,
    /// Candidate-combination bound for exhaustive enumeration
    #[arg(long, default_value_t = DEFAULT_COMBO_BOUND)]
    pub bound: u128,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(clap::Args)]
pub struct VerifyArgs {
    /// Suite to run (built-in: paper)
    #[arg(long, default_value = "paper")]
    pub suite: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn run(cli: &Cli) -> Result<(String, u8), CliError> {
    match &cli.command {
        Command::Group(a) => commands::group_cmd(a),
        Command::Burnside(a) => commands::burnside_cmd(a),
        Command::Functor(a) => commands::functor_cmd(a),
        Command::Ideals(a) => commands::ideals_cmd(a),
        Command::Spec(a) => commands::spec_cmd(a),
        Command::Stratify(a) => commands::stratify_cmd(a),
        Command::Ghost(a) => commands::ghost_cmd(a),
        Command::Verify(a) => commands::verify_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
