use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qsp", version, about = "Exact checks for type B Hecke algebras, their tensor representations and Schur functors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite, or all of them.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seconds allowed per suite before it is reported as failed.
        #[arg(long, default_value_t = 600)]
        timeout: u64,
        #[command(flatten)]
        flags: Flags,
    },
    /// Dimensions of the ±-powers in both presentations.
    Dims(Flags),
    /// Schur-Weyl decomposition of the tensor power.
    Decompose(Flags),
    /// A Schur functor of the given bipartition.
    Schur(Flags),
    /// Spectrum of the block K-matrix, and higher ±-powers when `--d` is set.
    Eigen(Flags),
    /// Double centralizer witness and Schur algebra dimension.
    Centralizer(Flags),
}

impl Command {
    pub fn flags(&self) -> &Flags {
        match self {
            Command::Verify { flags, .. } => flags,
            Command::Dims(f) | Command::Decompose(f) | Command::Schur(f) | Command::Eigen(f) | Command::Centralizer(f) => f,
        }
    }

    pub fn default_output(&self) -> Output {
        match self {
            Command::Verify { .. } => Output::Text,
            Command::Dims(_) => Output::Tsv,
            _ => Output::Json,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub e: Option<usize>,
    /// `symbolic` or `Q=<rat>,q=<rat>`.
    #[arg(long)]
    pub backend: Option<String>,
    /// Bipartition as `<λ>|<μ>`, e.g. `2,1|1` or `-|1,1`.
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long, value_enum)]
    pub output: Option<Output>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Tsv,
    Text,
}
