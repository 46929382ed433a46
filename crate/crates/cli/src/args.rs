use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sqwalk",
    version,
    about = "Quantum walks and communities on simplicial complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn common(&self) -> &Common {
        match &self.command {
            Command::Build { common, .. }
            | Command::Spectrum { common, .. }
            | Command::Walk { common, .. }
            | Command::Detect { common, .. }
            | Command::Modularity { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Edge list ("a b" per line, 1-indexed, `#` comments). Defaults to the
    /// bundled karate club network.
    pub input: Option<PathBuf>,
    /// Largest clique dimension kept when building the complex.
    #[arg(long, default_value_t = 4)]
    pub max_dim: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Worker threads for walk evolution.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Finite,
    Spectral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ThresholdMode {
    Strict,
    Geq,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[arg(long, default_value_t = simplex_walk::DEFAULT_TIME_STEPS)]
    pub time_steps: usize,
    #[arg(long, value_enum, default_value_t = Method::Finite)]
    pub method: Method,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simplex counts per dimension.
    Build {
        #[command(flatten)]
        common: Common,
        /// Also list the simplices of every dimension.
        #[arg(long)]
        list: bool,
    },
    /// Eigenvalues and Betti number of the Hodge Laplacian.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = simplex_walk::DEFAULT_KERNEL_TOLERANCE)]
        tolerance: f64,
    },
    /// Transition probabilities from one simplex.
    Walk {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: usize,
        /// Source simplex as comma-joined vertex ids, e.g. "1,2".
        #[arg(long)]
        source: String,
        #[command(flatten)]
        walk: WalkArgs,
    },
    /// Quantum-walk community detection.
    Detect {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, value_enum, default_value_t = ThresholdMode::Strict)]
        threshold: ThresholdMode,
    },
    /// Simplicial modularity of a partition read from JSON.
    Modularity {
        #[command(flatten)]
        common: Common,
        /// Overrides the dimension stored in the partition file.
        #[arg(long)]
        dim: Option<usize>,
        /// JSON file: `{"dim": n, "communities": [[[1,2], ...], ...]}` or a
        /// bare list of communities.
        #[arg(long)]
        partition: PathBuf,
    },
    /// Chain identities and the up/down community correspondence.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Check a single dimension instead of all of them.
        #[arg(long)]
        dim: Option<usize>,
    },
}
