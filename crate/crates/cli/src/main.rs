mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pi_lattice::PiError;

/// Exact codimensions of polynomial identities and integral Specht module
/// computations.
#[derive(Debug, Parser)]
#[command(name = "pi-lattice", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ordinary or proper codimension groups of a ring model.
    Codim(CodimArgs),
    /// Run a verification suite by claim id (or `all`).
    Verify(VerifyArgs),
    /// Specht lattices, Specht series and induced modules.
    Specht {
        #[command(subcommand)]
        action: SpechtCommand,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CodimArgs {
    /// `cyclic:m`, `ut2:ell,m`, `grassmann:ell,K`, `sum:[...]`, inline JSON or `@file.json`.
    #[arg(long)]
    pub ring: String,
    /// Degree or inclusive range, e.g. `4` or `2..5`.
    #[arg(long, default_value = "1..4")]
    pub n: String,
    /// Report proper codimensions instead of ordinary ones.
    #[arg(long)]
    pub proper: bool,
    /// Only report this q (0 or a prime power).
    #[arg(long)]
    pub q: Option<String>,
    /// Maximum number of generator multisets per computation.
    #[arg(long)]
    pub row_budget: Option<u64>,
    /// Include wall-clock timings (reports are then no longer byte-stable).
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub claim: String,
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Grassmann truncation.
    #[arg(long)]
    pub k: Option<usize>,
    /// Moduli for Young's rule, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub m: Option<Vec<u64>>,
    /// Recorded in the report; the suites themselves are deterministic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub row_budget: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum SpechtCommand {
    /// Filtration of `(S(λ)/mS(λ))↑S_n` by Young's rule.
    Filtrate {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rank of the Specht lattice `S(λ)`.
    Rank {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Specht series of the pair `(λ; μ)`.
    Series {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Process exit status contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Usage = 1,
    Resource = 2,
    Failed = 3,
}

pub fn status_of(err: &PiError) -> Status {
    match err {
        PiError::ResourceExceeded { .. } => Status::Resource,
        _ => Status::Usage,
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("PI_LATTICE_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if k > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage } else { Status::Pass };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    configure_threads();
    let status = match commands::run(&cli.command) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            status_of(&e)
        }
    };
    ExitCode::from(status as u8)
}
