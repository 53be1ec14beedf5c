use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qng_core::enumeration::{ScanFilter, ScanPredicate};
use qng_core::spectra::MatrixKind;
use qng_core::theorems::BoundId;

#[derive(Debug, Parser)]
#[command(name = "qng", version, about = "Nordhaus-Gaddum bounds for signless Laplacian eigenvalues")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the eigenvalues of a graph matrix.
    Spectrum {
        #[command(flatten)]
        graphs: GraphSource,
        #[arg(long, default_value = "Q", value_parser = parse_kind)]
        kind: MatrixKind,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check one bound on each input graph.
    Check {
        #[command(flatten)]
        graphs: GraphSource,
        #[arg(long, value_parser = parse_bound)]
        thm: BoundId,
        #[command(flatten)]
        ng: NgArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List every isomorphism class of the given orders, or deduplicate a graph6 stream.
    Enumerate {
        #[command(flatten)]
        orders: Orders,
        #[arg(long, default_value = "all", value_parser = parse_filter)]
        filter: ScanFilter,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate a predicate over every class of the given orders or over a graph6 stream.
    Scan {
        #[command(flatten)]
        orders: Orders,
        #[arg(long, default_value = "all", value_parser = parse_filter)]
        filter: ScanFilter,
        #[arg(long, value_parser = parse_predicate)]
        predicate: ScanPredicate,
        #[command(flatten)]
        ng: NgArgs,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Replay the exact algebra behind a parametric proof.
    ProofCheck {
        #[arg(long, value_parser = parse_bound)]
        thm: BoundId,
        #[command(flatten)]
        orders: Orders,
        /// Restrict the lower-bound replay to one second-largest degree.
        #[arg(long)]
        d2: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every bound (or a chosen list) on each input graph.
    Report {
        #[command(flatten)]
        graphs: GraphSource,
        #[arg(long, value_parser = parse_bound, value_delimiter = ',')]
        thm: Vec<BoundId>,
        #[command(flatten)]
        ng: NgArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Graph in graph6 encoding; may be repeated.
    #[arg(long)]
    pub graph6: Vec<String>,
    /// Family expression such as `K3,3`, `star 6` or `join(2K2, E3)`; may be repeated.
    #[arg(long)]
    pub family: Vec<String>,
    /// File with one graph6 string per line; `-` reads standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Orders {
    #[arg(long, conflicts_with = "n_range")]
    pub n: Option<usize>,
    /// Inclusive range `LO..HI`.
    #[arg(long, value_parser = parse_range)]
    pub n_range: Option<RangeInclusive<usize>>,
}

impl Orders {
    pub fn range(&self) -> Option<RangeInclusive<usize>> {
        self.n.map(|n| n..=n).or_else(|| self.n_range.clone())
    }
}

#[derive(Debug, Args)]
pub struct NgArgs {
    /// Matrix for `--thm ng`.
    #[arg(long, default_value = "Q", value_parser = parse_kind)]
    pub kind: MatrixKind,
    /// Eigenvalue index for `--thm ng`.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: qng_core::Error| e.to_string())
}

fn parse_bound(s: &str) -> Result<BoundId, String> {
    s.parse().map_err(|e: qng_core::Error| e.to_string())
}

fn parse_filter(s: &str) -> Result<ScanFilter, String> {
    s.parse().map_err(|e: qng_core::Error| e.to_string())
}

fn parse_predicate(s: &str) -> Result<ScanPredicate, String> {
    s.parse().map_err(|e: qng_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad lower end in {s:?}"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad upper end in {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}
