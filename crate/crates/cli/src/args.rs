use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "dirdom", version, about = "Directed domination numbers of graphs: exact values, bounds and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound report with exact orientation maxima for each input graph.
    Exact(GraphArgs),
    /// Bound report from invariants only, without orientation sweeps.
    Bounds(GraphArgs),
    /// Check a theorem over every labeled graph of an order, or a sample.
    Verify(VerifyArgs),
    /// Greedy partition certificates for each input instance.
    Partition(PartitionArgs),
    /// Domination numbers of random tournaments as CSV.
    Tournament(TournamentArgs),
    /// Tournaments in which every k-set has a common dominator.
    Schuette(SchuetteArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
    Digraph,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when omitted.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
    /// Built-in instance instead of an input file, e.g. `cycle:5`,
    /// `gnp:8:0.5`, `tournament:7`, `qr7`.
    #[arg(long, value_name = "RECIPE", conflicts_with = "input")]
    pub gen: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Largest number of orientations swept per graph.
    #[arg(long, value_name = "COUNT", default_value_t = dirdom::graph::DEFAULT_ORIENTATION_CAP)]
    pub max_orientations: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Output file; standard output when omitted.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Multiplicity for the r-fold maximum.
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Radius for the distance maximum.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Chain,
    Main,
    Peel,
    #[value(alias = "ng_upper")]
    NgUpper,
    Distance,
    Rdom,
    Degenerate,
    K1m,
    Bounds,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    /// Graph order.
    #[arg(long)]
    pub n: usize,
    /// Random graphs to check; every labeled graph when omitted.
    #[arg(long)]
    pub samples: Option<u64>,
    /// Edge probability for sampled graphs.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Permit exhaustive runs at order 6.
    #[arg(long)]
    pub allow_large: bool,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtractorArg {
    Independence,
    #[value(alias = "peel")]
    Outdegree,
    Degenerate,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = ExtractorArg::Independence)]
    pub extractor: ExtractorArg,
    /// Independence cap for `outdegree`; computed per graph when omitted.
    #[arg(long)]
    pub alpha: Option<usize>,
    /// Complement degeneracy for `degenerate`; computed per graph when
    /// omitted.
    #[arg(long)]
    pub d: Option<usize>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct TournamentArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Append the quadratic-residue tournament when `--n 7`.
    #[arg(long)]
    pub include_qr7: bool,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct SchuetteArgs {
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub run: RunArgs,
}
