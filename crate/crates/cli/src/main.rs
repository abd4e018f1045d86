use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod config;
mod output;
mod presets;
mod svg;

use output::Format;

/// Workbench for compact sets under the metric linear combination and
/// set-valued fractal interpolation.
#[derive(Debug, Parser)]
#[command(name = "svfrac", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Directory for CSV/SVG/summary artifacts
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,
    /// Seed for randomized commands
    #[arg(long, global = true, default_value_t = commands::DEFAULT_SEED)]
    pub seed: u64,
    /// Run self-checks and exit nonzero if any fails
    #[arg(long, global = true)]
    pub check: bool,
    /// Table format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Metric linear combination of set literals
    MetricSum {
        /// Comma-separated weights, one per set
        #[arg(short, long, allow_hyphen_values = true)]
        weights: String,
        /// Set literals such as "{1,2}" or "[0,1] u {3}"
        #[arg(required = true)]
        sets: Vec<String>,
        /// Cross-check against brute-force chain enumeration (finite sets)
        #[arg(long)]
        oracle: bool,
    },
    /// Metric Bernstein polynomial of samples at j/k
    Bernstein {
        /// Samples f(0), f(1/k), …, f(1) separated by ';' (default: reference W samples)
        #[arg(long)]
        samples: Option<String>,
        /// Number of evaluation points on [0,1]
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
    /// Sampled Weierstrass set-valued function
    Weierstrass {
        #[arg(long, default_value_t = 513)]
        res: usize,
        #[arg(long, default_value_t = 0.01)]
        a_lo: f64,
        #[arg(long, default_value_t = 0.5)]
        a_hi: f64,
        #[arg(long, default_value_t = 30)]
        terms: usize,
        #[arg(long, default_value_t = 513)]
        a_samples: usize,
    },
    /// Fixed point of the RB operator for an IFS config
    Interpolate {
        config: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Chaos-game orbit for an IFS config
    Chaos {
        config: PathBuf,
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(long)]
        burn: Option<usize>,
    },
    /// Box-counting dimension of a point cloud
    Boxdim {
        #[arg(long, value_enum, conflicts_with = "input")]
        preset: Option<BoxPreset>,
        /// CSV file with header `x,y`
        #[arg(long)]
        input: Option<PathBuf>,
        /// Comma-separated decreasing scales (default 2^-4 … 2^-11)
        #[arg(long)]
        deltas: Option<String>,
    },
    /// Sampled distance set of a graph
    Distset {
        #[arg(long, value_enum, conflicts_with = "config")]
        preset: Option<DistPreset>,
        /// IFS config whose fixed point is used
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 1024)]
        probes: usize,
        #[arg(long, value_enum, default_value_t = DistKind::Star)]
        kind: DistKind,
    },
    /// Regenerate the worked examples and figures
    Demo {
        #[arg(value_enum, default_value_t = DemoItem::All)]
        item: DemoItem,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoxPreset {
    Segment,
    Square,
    Cantor10,
    Weierstrass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistPreset {
    Constant,
    Weierstrass,
    Fractal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistKind {
    Star,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoItem {
    All,
    Weierstrass,
    Bernstein,
    Table,
}

/// 0 on success, 1 when a `--check` failed, 2 on error.
fn exit_code(r: &anyhow::Result<bool>) -> u8 {
    match r {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = commands::run(&cli);
    match &r {
        Ok(false) => eprintln!("check failed"),
        Err(e) => eprintln!("error: {e:#}"),
        Ok(true) => {}
    }
    ExitCode::from(exit_code(&r))
}
