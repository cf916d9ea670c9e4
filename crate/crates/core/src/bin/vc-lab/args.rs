use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "vc-lab",
    version,
    about = "Vertex cover approximation experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve one graph and print the cover.
    Solve(SolveArgs),
    /// Write a generated graph in DIMACS (or edge-list) form.
    Gen(GenArgs),
    /// Compare greedy, matching and exact covers over many random instances.
    Bench(BenchArgs),
    /// Compare greedy, matching and exact covers on one graph.
    Compare(CompareArgs),
    /// Hill-climb over small graphs looking for a high greedy/optimal ratio.
    Search(SearchArgs),
    /// Measure how greedy runtime scales with the vertex count.
    Probe(ProbeArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Gnp,
    Star,
    Path,
    Crown,
    Complete,
}

/// Generator flags shared by every subcommand that can build its own graph.
#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    /// Graph family to generate instead of reading a file.
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    /// Vertex count (gnp, star, path, complete).
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of mids for the crown graph (2k + 1 vertices).
    #[arg(long)]
    pub k: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Graph source: a file or a generator, never both.
#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// DIMACS file (`.col`, `.dimacs`) or 0-based edge list (`.edges`, `.el`, `.txt`).
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Accept repeated edges and a wrong declared edge count in DIMACS input.
    #[arg(long)]
    pub lenient: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgChoice {
    Greedy,
    Matching,
    Exact,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieChoice {
    Lowest,
    Highest,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrderChoice {
    Lex,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Edgelist,
}

/// Solver knobs shared by `solve`, `compare` and `bench`.
#[derive(Args, Debug, Clone)]
pub struct SolverArgs {
    /// Tie rule for the greedy solver.
    #[arg(long, value_enum, default_value = "lowest")]
    pub tie: TieChoice,
    /// Seed for `--tie random` and `--edge-order random`.
    #[arg(long, default_value_t = 0)]
    pub solver_seed: u64,
    /// Edge order for the matching solver.
    #[arg(long, value_enum, default_value = "lex")]
    pub edge_order: EdgeOrderChoice,
    /// Branch-node budget of the exact solver.
    #[arg(long, default_value_t = vc_lab::solvers::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Greedy pick script (one vertex per line). Defaults to `<input>.trace`
    /// next to the input file when that exists.
    #[arg(long)]
    pub script: Option<PathBuf>,
    /// Ignore any sidecar pick script.
    #[arg(long, conflicts_with = "script")]
    pub no_script: bool,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "greedy")]
    pub alg: AlgChoice,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Repeat for more detail; one `-v` prints the step trace.
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value = "dimacs")]
    pub format: GraphFormat,
    /// Vertex labels, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<String>>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Leave wall-time columns out of the report.
    #[arg(long)]
    pub no_timing: bool,
    /// Timed repetitions per algorithm (median reported).
    #[arg(long, default_value_t = 5)]
    pub repetitions: usize,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub model: ModelKind,
    /// Vertex counts; one spec per value.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<usize>,
    /// Crown sizes; one spec per value.
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    /// Master seed; per-trial seeds are derived from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the exact oracle entirely.
    #[arg(long)]
    pub no_exact: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub report: ReportArgs,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long)]
    pub no_exact: bool,
    #[command(flatten)]
    pub report: ReportArgs,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Largest vertex count explored (at most 16).
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
    #[arg(long, default_value_t = 1000)]
    pub iters: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Start from this DIMACS file instead of a random graph.
    #[arg(long, conflicts_with = "from")]
    pub start: Option<PathBuf>,
    /// Start from a generated graph, e.g. `--from crown --k 4`.
    #[arg(long, value_enum)]
    pub from: Option<ModelKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Write the best graph found here (DIMACS).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ProbeArgs {
    #[arg(long, value_delimiter = ',', default_value = "256,512,1024,2048")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
