use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use regionstereo::config::{AlgorithmKind, ConfigLayer};
use regionstereo::eval::Unassigned;

#[derive(Debug, Parser)]
#[command(name = "regionstereo", version, about = "Region based stereo matching")]
pub struct Cli {
    /// TOML config file; command-line flags take precedence over it.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a disparity map.
    Match(MatchArgs),
    /// Drop pixels whose match energy exceeds alpha times the mean.
    Filter(FilterArgs),
    /// Convert a disparity map to a depth image.
    Depth(DepthArgs),
    /// Export a colored point cloud as ASCII PLY.
    Cloud(CloudArgs),
    /// Run the five reference configurations and report reliability.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Left image (PPM or PNG).
    pub left: Option<PathBuf>,
    /// Right image (PPM or PNG); output maps are registered to it.
    pub right: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    /// Window rows.
    #[arg(short = 'n', value_name = "ROWS")]
    pub n: Option<usize>,
    /// Window columns.
    #[arg(short = 'm', value_name = "COLS")]
    pub m: Option<usize>,
    /// Largest disparity searched.
    #[arg(long = "dmax")]
    pub d_max: Option<usize>,
}

/// A disparity PGM plus its validity mask.
#[derive(Debug, Args)]
pub struct DisparityInput {
    #[arg(long, short = 'd', value_name = "PGM")]
    pub disparity: PathBuf,
    /// Mask PGM, nonzero where estimated. Defaults to the sidecar next to
    /// the disparity file when present.
    #[arg(long, value_name = "PGM")]
    pub mask: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RigArgs {
    /// Focal length.
    #[arg(long = "focal", short = 'f', visible_alias = "f")]
    pub f: Option<f64>,
    /// Baseline.
    #[arg(long = "baseline", short = 't', visible_alias = "t")]
    pub t: Option<f64>,
    /// Odd median window applied to disparities first; 1 disables it.
    #[arg(long)]
    pub median: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, value_parser = parse_algorithm)]
    pub algorithm: Option<AlgorithmKind>,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Smoothing passes for the global matcher.
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Energy threshold for line growing.
    #[arg(long)]
    pub vlg: Option<f64>,
    /// Output disparity PGM; a `.mask.pgm` sidecar is written next to it.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// Directory for normalized PGMs of every smoothed energy slice (global).
    #[arg(long, value_name = "DIR")]
    pub dump_volume: Option<PathBuf>,
    /// Point-status PGM (line growing).
    #[arg(long, value_name = "PGM")]
    pub dump_status: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub input: DisparityInput,
    #[command(flatten)]
    pub window: WindowArgs,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Filtered disparity PGM, with mask sidecar.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// Normalized PGM of the filtered energy map.
    #[arg(long, value_name = "PGM")]
    pub energy: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DepthArgs {
    #[command(flatten)]
    pub input: DisparityInput,
    #[command(flatten)]
    pub rig: RigArgs,
    /// Normalized depth PGM, with mask sidecar.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CloudArgs {
    #[command(flatten)]
    pub input: DisparityInput,
    /// Image that supplies point colors (the right image).
    #[arg(long)]
    pub right: Option<PathBuf>,
    #[command(flatten)]
    pub rig: RigArgs,
    /// Output PLY.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// CSV report path.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Ground-truth disparity PGM for the bad-pixel rate.
    #[arg(long, value_name = "PGM")]
    pub truth: Option<PathBuf>,
    /// Truth gray levels per disparity step.
    #[arg(long, default_value_t = 1.0)]
    pub truth_scale: f64,
    #[arg(long, default_value_t = 1.0)]
    pub bad_threshold: f64,
    /// How unassigned pixels are scored: `zero` or `exclude`.
    #[arg(long, default_value = "zero", value_parser = parse_unassigned)]
    pub unassigned: Unassigned,
}

fn parse_algorithm(s: &str) -> Result<AlgorithmKind, String> {
    s.parse().map_err(|e: regionstereo::Error| e.to_string())
}

fn parse_unassigned(s: &str) -> Result<Unassigned, String> {
    s.parse().map_err(|e: regionstereo::Error| e.to_string())
}

impl PairArgs {
    fn layer(&self, layer: &mut ConfigLayer) {
        layer.left.clone_from(&self.left);
        layer.right.clone_from(&self.right);
    }
}

impl WindowArgs {
    fn layer(&self, layer: &mut ConfigLayer) {
        layer.n = self.n;
        layer.m = self.m;
        layer.d_max = self.d_max;
    }
}

impl RigArgs {
    fn layer(&self, layer: &mut ConfigLayer) {
        layer.f = self.f;
        layer.t = self.t;
        layer.median = self.median;
    }
}

impl Command {
    /// The configuration values given on the command line.
    pub fn layer(&self) -> ConfigLayer {
        let mut layer = ConfigLayer::default();
        match self {
            Command::Match(a) => {
                a.pair.layer(&mut layer);
                a.window.layer(&mut layer);
                layer.algorithm = a.algorithm;
                layer.iterations = a.iterations;
                layer.v_lg = a.vlg;
                layer.output.clone_from(&a.output);
                layer.dump_volume.clone_from(&a.dump_volume);
                layer.dump_status.clone_from(&a.dump_status);
            }
            Command::Filter(a) => {
                a.pair.layer(&mut layer);
                a.window.layer(&mut layer);
                layer.alpha = a.alpha;
                layer.output.clone_from(&a.output);
            }
            Command::Depth(a) => {
                a.rig.layer(&mut layer);
                layer.output.clone_from(&a.output);
            }
            Command::Cloud(a) => {
                a.rig.layer(&mut layer);
                layer.right.clone_from(&a.right);
                layer.output.clone_from(&a.output);
            }
            Command::Bench(a) => {
                a.pair.layer(&mut layer);
                layer.alpha = a.alpha;
                layer.iterations = a.iterations;
                layer.output.clone_from(&a.output);
            }
        }
        layer
    }
}
