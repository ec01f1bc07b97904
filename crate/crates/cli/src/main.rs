mod cache;
mod commands;
mod csv;
mod input;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use posetpoly::corpus::{DEFAULT_SEED, DEFAULT_SIZE};
use posetpoly::fcalc::DEFAULT_MAX_BRUTE;

/// Order and chain polytopes of finite posets.
#[derive(Debug, Parser)]
#[command(name = "posetpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Options,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Poset expression, e.g. "antichain(2) < chain(1) < antichain(2)"
    #[arg(long, global = true, conflicts_with = "file")]
    pub expr: Option<String>,

    /// File holding a poset expression or poset JSON
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = KindArg::Order)]
    pub kind: KindArg,

    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Brute)]
    pub method: MethodArg,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Number of random posets added to the curated corpus
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE)]
    pub corpus_size: usize,

    /// Largest leaf enumerated directly by the recursive method
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BRUTE,
          value_parser = clap::value_parser!(usize))]
    pub max_brute: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Directory for cached results
    #[arg(long, global = true, env = "POSETPOLY_CACHE")]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Order,
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Recursive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Edges,
    HibiLiFacets,
    OriginEstimate,
    SimplexFigure,
    PyrJoin,
    LemmaAbcd,
    OrdinalIdentities,
    MainTheorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Vrep,
    Hrep,
    Faces,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Elements, covers, subset counts, X-freeness and facet counts
    Describe,
    /// f-vector of the order or chain polytope
    Fvector,
    /// Both f-vectors and whether the order polytope's is bounded by the chain polytope's
    Compare,
    /// Run a property suite over the seeded corpus
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Split into ordinal sums and disjoint unions of X-free posets
    Decompose,
    /// Print the seeded corpus
    Corpus,
    /// Vertices, facet inequalities or faces of a polytope
    Export {
        #[arg(long, value_enum, default_value_t = What::Faces)]
        what: What,
    },
}

/// Exit status for input and usage problems.
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.opts.max_brute == 0 {
        eprintln!("error: --max-brute must be at least 1");
        return ExitCode::from(USAGE);
    }
    match commands::run(&cli.command, &cli.opts) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}
