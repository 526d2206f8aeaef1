use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "clique-splitter",
    version,
    about = "Split graph vertices into parts with bounded clique numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition a graph for a quota list and report the result.
    Partition(PartitionArgs),
    /// Check a partition report against a graph.
    Verify(VerifyArgs),
    /// Generate a graph from a recipe.
    Gen(GenArgs),
    /// Sample small graphs and report oracle/engine findings as JSON lines.
    Probe(ProbeArgs),
    /// Print basic invariants of a graph.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dimacs,
    Json,
}

/// Where the graph comes from: a file or a generator recipe.
#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Graph file (DIMACS, or adjacency JSON when the name ends in .json).
    #[arg(long = "in", value_name = "PATH", conflicts_with = "gen")]
    pub input: Option<PathBuf>,

    /// Generator recipe, e.g. `regular:28,13` or `strong:5x2`.
    #[arg(long, value_name = "RECIPE")]
    pub gen: Option<String>,

    /// Force the input file format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Seed for generators and randomized searches.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Vertex cap for exhaustive assignment search.
    #[arg(long = "budget-n", value_name = "N")]
    pub budget_n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct PartitionArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Quota list p1,p2,... in non-increasing order.
    #[arg(long, value_name = "P1,P2,...")]
    pub quotas: String,

    /// Strategy cascade, comma separated (default: coloring,stripping,exchange,exhaustive).
    #[arg(long, value_name = "NAMES")]
    pub strategy: Option<String>,

    /// Maximize the first part (two quotas only).
    #[arg(long)]
    pub maximize_first: bool,

    #[command(flatten)]
    pub budget: BudgetArgs,

    /// Write the JSON report to this file.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Print the JSON report to stdout instead of a summary.
    #[arg(long)]
    pub json: bool,

    /// Report elapsed_ms as 0 so reports are byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Partition report (as written by `partition --out`).
    #[arg(long, value_name = "PATH")]
    pub partition: PathBuf,

    /// Override the quotas stored in the report.
    #[arg(long, value_name = "P1,P2,...")]
    pub quotas: Option<String>,

    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    /// Generator recipe.
    pub recipe: String,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Output file; the graph goes to stdout when omitted.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Dimacs)]
    pub format: Format,

    /// Print the summary as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ProbeArgs {
    /// Family recipes to sample (repeatable), e.g. `gnp:7,0.5`.
    #[arg(long = "recipe", value_name = "RECIPE", required = true)]
    pub recipes: Vec<String>,

    /// First seed of the sampled range.
    #[arg(long, default_value_t = 0)]
    pub seed_start: u64,

    /// Number of seeds per recipe.
    #[arg(long, default_value_t = 100)]
    pub samples: u64,

    /// Quota policy: `all2`, `all-feasible`, `none`, or a fixed list `p1,p2,...`.
    #[arg(long, default_value = "all2")]
    pub quotas: String,

    #[command(flatten)]
    pub budget: BudgetArgs,

    /// Write findings here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub source: GraphSource,

    #[command(flatten)]
    pub budget: BudgetArgs,

    #[arg(long)]
    pub json: bool,
}
