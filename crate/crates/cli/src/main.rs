use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod error;
mod io;
mod pretty;

use error::ErrorRecord;

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (schema 1)");

#[derive(Debug, Parser)]
#[command(name = "ffharmonic", version = VERSION, about = "Fourier analysis and bent functions over the unit circle of GF(p^2n)")]
pub struct Cli {
    /// Aligned text instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Write the result to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Where a group's field context comes from when the group file has none.
#[derive(Debug, Clone, Args)]
pub struct ContextArgs {
    /// Context JSON file.
    #[arg(long)]
    pub context: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Modulus coefficients, low degree first, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field parameters, modulus and generators.
    FieldInfo {
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Character table, rows indexed by α.
    CharTable {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, default_value_t = ffharmonic::characters::DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Fourier transform of a function.
    Ft {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Inverse Fourier transform.
    Ift {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Convolution of two functions.
    Conv {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        with: PathBuf,
    },
    /// Bentness verdict; exit 0 if bent, 1 if not.
    BentCheck {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Maiorana-McFarland function on G² from a circle-valued g on G.
    Mm {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Dual of a bent function.
    Dual {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exhaustive search for bent functions with values of order dividing d.
    Search {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = ffharmonic::bent::DEFAULT_MAX_CANDIDATES)]
        max_candidates: u128,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Classical against field bentness; exit 1 on a counterexample.
    Compare {
        #[arg(long)]
        group: Option<PathBuf>,
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        m: Option<u32>,
        /// All m^|G| exponent tables.
        #[arg(long, conflicts_with_all = ["input", "random"])]
        exhaustive: bool,
        /// A single exponent function file.
        #[arg(long = "in", conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Number of random exponent tables.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance for the classical test, default 1e-6·|G|.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = ffharmonic::bent::DEFAULT_MAX_CANDIDATES)]
        max_candidates: u128,
    },
    /// Multidimensional bentness of a vector function; exit 0 if bent, 1 if not.
    VectorialCheck {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = error::CliError::Usage(e.render().to_string().trim().to_owned());
            report(&err);
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok(verdict) => ExitCode::from(if verdict { 0 } else { 1 }),
        Err(e) => {
            report(&e);
            ExitCode::from(2)
        }
    }
}

fn report(e: &error::CliError) {
    let record = ErrorRecord::from(e);
    eprintln!(
        "{}",
        serde_json::to_string(&record).expect("error record serializes")
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn version_carries_schema() {
        assert!(VERSION.ends_with(&format!("(schema {})", ffharmonic::json::SCHEMA_VERSION)));
    }
}
