use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mdl_core::{Family, DEFAULT_BUDGET};

use crate::verify::Theorem;

#[derive(Debug, Parser)]
#[command(name = "mdl", version, about = "Metric, strong metric and doubly metric dimension of Johnson and Kneser graphs")]
pub struct Cli {
    /// Branch-node budget per exact solve
    #[arg(long, global = true, env = "MDL_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a family graph (or re-emit an edge-list file) in canonical form
    Gen(GenArgs),
    /// Compute one invariant of a graph
    Invariant(InvariantArgs),
    /// Check a theorem over a parameter sweep
    Verify(VerifyArgs),
    /// Write the strong or doubly resolving ILP model in LP format
    ExportLp(ExportArgs),
    /// Tabulate invariants over family parameter ranges as CSV
    Atlas(AtlasArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// `J:n,k`, `K:n,k`, an edge-list path, or `-` for standard input
    pub source: String,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    #[arg(value_enum)]
    pub which: Invariant,
    /// `J:n,k`, `K:n,k`, an edge-list path, or `-` for standard input
    pub source: String,
    /// `csv` prints a single atlas row instead of the report
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: Theorem,
    /// Inclusive range `a..b`, or a single value; defaults to the theorem's desk range
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub k: Option<RangeInclusive<usize>>,
    /// Restrict family-generic theorems to one family
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// `J:n,k`, `K:n,k`, an edge-list path, or `-` for standard input
    pub source: String,
    #[arg(long, value_enum, default_value_t = LpMode::Strong)]
    pub mode: LpMode,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AtlasArgs {
    #[arg(long, value_parser = parse_family, value_delimiter = ',', default_value = "J,K")]
    pub family: Vec<Family>,
    #[arg(long, value_parser = parse_range)]
    pub n: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    pub k: RangeInclusive<usize>,
    #[arg(long = "invariant", value_enum, value_delimiter = ',', default_value = "beta_s")]
    pub invariants: Vec<Invariant>,
    /// Where values come from: exact solvers or closed forms
    #[arg(long, value_enum, default_value_t = Source::Solver)]
    pub source: Source,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Csv,
}

/// Declared in tag order so derived ordering matches the CSV sort.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Invariant {
    #[value(name = "beta")]
    Beta,
    #[value(name = "beta_s")]
    BetaS,
    #[value(name = "diam")]
    Diam,
    #[value(name = "psi")]
    Psi,
}

impl Invariant {
    pub fn tag(self) -> &'static str {
        match self {
            Invariant::Beta => "beta",
            Invariant::BetaS => "beta_s",
            Invariant::Diam => "diam",
            Invariant::Psi => "psi",
        }
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Invariant as ValueEnum>::from_str(s, false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LpMode {
    Strong,
    Doubly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Solver,
    Formula,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: mdl_core::Error| e.to_string())
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-point range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range `{s}`, expected a..b"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}
