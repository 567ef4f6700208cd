use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use tds_entropy::{DenominatorMode, Estimator};

#[derive(Debug, Parser)]
#[command(
    name = "tds-entropy",
    version,
    about = "Entropy and complexity curves from TDS panel data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a manifest and event table; exit 1 on any error.
    Validate(InputArgs),
    /// Generate a synthetic event table and manifest from a simulator config.
    Simulate(SimulateArgs),
    /// Write one entropy curve CSV per sample.
    Entropy(CurveArgs),
    /// Write complexity curve CSVs, from entropy CSVs or end to end.
    Complexity(ComplexityArgs),
    /// Write per-attribute dominance-rate CSVs.
    Tds(TdsArgs),
    /// Render a curve CSV to SVG.
    Plot(PlotArgs),
    /// Run the full pipeline: curves, features, figures and a run report.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    #[arg(long)]
    pub events: PathBuf,
}

#[derive(Debug, Args)]
pub struct EstimatorArgs {
    /// `plugin` or `chao-shen`; defaults to the manifest option.
    #[arg(long, value_parser = parse_estimator)]
    pub estimator: Option<Estimator>,
    /// `panel` or `active`; defaults to the manifest option.
    #[arg(long, value_parser = parse_denominator)]
    pub denominator: Option<DenominatorMode>,
    /// Number of grid intervals over 0..100; defaults to the manifest option.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub grid_size: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the seed in the config.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub estimator: EstimatorArgs,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ComplexityArgs {
    /// Entropy curve CSVs to convert.
    #[arg(long = "from", num_args = 1.., conflicts_with_all = ["manifest", "events"])]
    pub from: Vec<PathBuf>,
    #[arg(long, requires = "events")]
    pub manifest: Option<PathBuf>,
    #[arg(long, requires = "manifest")]
    pub events: Option<PathBuf>,
    #[command(flatten)]
    pub estimator: EstimatorArgs,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct TdsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub grid_size: Option<u32>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Output SVG path.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub title: Option<String>,
    /// Y axis maximum; 0.25 for complexity tables, 1 otherwise.
    #[arg(long)]
    pub y_max: Option<f64>,
    /// Centered moving-average window (odd) applied before drawing.
    #[arg(long, value_parser = parse_window)]
    pub smooth: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub estimator: EstimatorArgs,
    /// Smooth the figures (not the CSVs) with this odd window.
    #[arg(long, value_parser = parse_window)]
    pub smooth: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
}

fn parse_estimator(s: &str) -> Result<Estimator, String> {
    s.parse()
}

fn parse_denominator(s: &str) -> Result<DenominatorMode, String> {
    s.parse()
}

fn parse_window(s: &str) -> Result<usize, String> {
    let w: usize = s
        .parse()
        .map_err(|_| format!("`{s}` is not a window size"))?;
    if w.is_multiple_of(2) {
        return Err(format!("smoothing window must be odd, got {w}"));
    }
    Ok(w)
}
