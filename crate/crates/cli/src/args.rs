//! Command-line surface. Every run is fully described by these values.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partcount_core::PartSet;

#[derive(Debug, Parser)]
#[command(
    name = "partcount",
    version,
    about = "Exact restricted-partition counts and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit one table of values for n in a range.
    Compute(ComputeArgs),
    /// Check catalog identities and emit one JSON report per (identity, set).
    Verify(VerifyArgs),
    /// Finite-difference checks of the quasi-polynomial structure, plus ratios.
    Asymptotics(AsymptoticsArgs),
    /// Compare brute-force enumeration with the series engines.
    OracleDiff(OracleDiffArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_set(text: &str) -> Result<PartSet, String> {
    text.parse()
        .map_err(|e: partcount_core::PartSetError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FnName {
    P,
    Q,
    Np,
    Nq,
    PParityDiff,
    QParityDiff,
    Tau,
    TauS,
    Sigma,
    SigmaS,
    Cl,
    Hamming,
    Vp,
}

impl FnName {
    /// First index at which the function is defined.
    pub fn first_n(self) -> usize {
        match self {
            FnName::Np
            | FnName::Nq
            | FnName::Tau
            | FnName::TauS
            | FnName::Sigma
            | FnName::SigmaS
            | FnName::Vp => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Part set, e.g. `naturals`, `finite:2,3`, `ppowers:2`.
    #[arg(long, value_parser = parse_set, default_value = "naturals")]
    pub set: PartSet,
    #[arg(long = "fn", value_enum)]
    pub function: FnName,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    /// Prime for `vp`.
    #[arg(long, default_value_t = 2)]
    pub prime: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id, or `all`.
    #[arg(long, default_value = "all")]
    pub identity: String,
    /// Restrict to one set. Without it every default set is used; pairs an
    /// identity does not apply to are reported as skipped.
    #[arg(long, value_parser = parse_set)]
    pub set: Option<PartSet>,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    P,
    Np,
    Both,
}

#[derive(Debug, Args)]
pub struct AsymptoticsArgs {
    /// Finite part set with gcd 1.
    #[arg(long, value_parser = parse_set)]
    pub set: PartSet,
    /// Last `l` in the sample window; defaults to `k + 4`.
    #[arg(long)]
    pub l_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = TargetArg::Np)]
    pub target: TargetArg,
    /// Also run from `l = 0`, reporting without affecting the exit code.
    #[arg(long)]
    pub strict: bool,
    /// Points at which to report `N^p_A(n) / (c n^k)`.
    #[arg(long, value_delimiter = ',', default_value = "100,1000")]
    pub ratio_n: Vec<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OracleDiffArgs {
    #[arg(long, value_parser = parse_set)]
    pub set: PartSet,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[command(flatten)]
    pub output: Output,
}
