//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use projstat::classify::DistanceKind;

use crate::records::OutputFormat;

#[derive(Parser, Debug)]
#[command(
    name = "projstat",
    version,
    about = "Classification and hypothesis testing for high-dimensional discrete data via low-dimensional projections"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fit the projection classifier and report test error
    Classify(ClassifyArgs),
    /// Classify phantom images from per-direction histograms
    Tomo(TomoArgs),
    /// Run a hypothesis test
    #[command(subcommand)]
    Test(TestCommand),
    /// Generate synthetic datasets
    #[command(subcommand)]
    Gen(GenCommand),
    /// Reproduce the benchmark studies at a chosen scale
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceArg {
    W1,
    Ks,
    Cvm,
    Tv,
}

impl From<DistanceArg> for DistanceKind {
    fn from(d: DistanceArg) -> Self {
        match d {
            DistanceArg::W1 => DistanceKind::W1,
            DistanceArg::Ks => DistanceKind::Ks,
            DistanceArg::Cvm => DistanceKind::Cvm,
            DistanceArg::Tv => DistanceKind::Tv,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Csv,
    JsonLines,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::JsonLines => OutputFormat::JsonLines,
        }
    }
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Root seed (replicate r derives its own stream)
    #[arg(long)]
    pub seed: u64,
    /// Labeled binary matrix to classify (final column = class); when
    /// omitted, independent-vs-equicorrelated data are generated
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[arg(long, default_value_t = 5)]
    pub dim: usize,
    /// Pairwise correlation of the generated class-1 data
    #[arg(long, default_value_t = 0.9)]
    pub corr: f64,
    /// Number of random 1-D projections
    #[arg(long, default_value_t = 100)]
    pub projections: usize,
    #[arg(long, value_enum, default_value_t = DistanceArg::Cvm)]
    pub distance: DistanceArg,
    /// Observations generated per class
    #[arg(long, default_value_t = 200)]
    pub n_per_class: usize,
    /// Fraction of the data held out for testing
    #[arg(long, default_value_t = 0.25)]
    pub test_frac: f64,
    #[arg(long, default_value_t = 10)]
    pub replicates: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct TomoArgs {
    #[arg(long)]
    pub seed: u64,
    /// Phantom scenario (1 or 2)
    #[arg(long, default_value_t = 1)]
    pub scenario: u8,
    #[arg(long, default_value_t = 100)]
    pub images_per_class: usize,
    /// Number of random directions
    #[arg(long, default_value_t = 40)]
    pub projections: usize,
    /// Neighbour count for the per-direction vote (forced odd)
    #[arg(long, default_value_t = 21)]
    pub neighbors: usize,
    /// Histogram bins per direction
    #[arg(long, default_value_t = 30)]
    pub bins: usize,
    #[arg(long, default_value_t = 0.75)]
    pub train_frac: f64,
    #[arg(long, default_value_t = 1)]
    pub replicates: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Subcommand, Debug)]
pub enum TestCommand {
    /// One-sample projected KS test against the uniform law on {0,1}^d
    OneSampleKs(OneSampleArgs),
    /// Two-sample projected KS test with permutation calibration
    TwoSampleKs(TwoSampleArgs),
    /// Averaged KS statistic over several projections, Monte Carlo calibrated
    MultiKs(MultiKsArgs),
    /// Single-datum coordinate-sum test against the central Binomial interval
    SumStructure(SumStructureArgs),
    /// Rare-distribution test from N binary vectors
    Rare(RareArgs),
    /// Power sweep of the coordinate-sum test over Beta parameter grids
    PbPower(PbPowerArgs),
}

#[derive(Args, Debug)]
pub struct OneSampleArgs {
    #[arg(long)]
    pub seed: u64,
    /// Binary matrix to test; generated under --corr when omitted
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    pub dim: usize,
    /// Sample size when generating
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    /// Correlation of the generated data (0 = the null itself)
    #[arg(long, default_value_t = 0.0)]
    pub corr: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Monte Carlo calibration size
    #[arg(long, default_value_t = 500)]
    pub mc_reps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct TwoSampleArgs {
    #[arg(long)]
    pub seed: u64,
    /// First binary matrix; generated when omitted
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Second binary matrix; generated when omitted
    #[arg(long)]
    pub data2: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    pub dim: usize,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    /// Correlation of the generated second sample (first is independent)
    #[arg(long, default_value_t = 0.0)]
    pub corr: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Permutation count
    #[arg(long, default_value_t = 500)]
    pub mc_reps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct MultiKsArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub dim: usize,
    /// Pairwise odds ratio of the generated data (1 = the null itself)
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    #[arg(long, default_value_t = 50)]
    pub projections: usize,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, default_value_t = 500)]
    pub mc_reps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct SumStructureArgs {
    /// Observed coordinate sum
    #[arg(long)]
    pub observed: usize,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
}

#[derive(Args, Debug)]
pub struct RareArgs {
    #[arg(long)]
    pub seed: u64,
    /// Binary matrix to test; generated from Beta(gamma1, gamma2)
    /// Poisson-Binomial rows when omitted
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[arg(long, default_value_t = 20)]
    pub dim: usize,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 3.0)]
    pub gamma1: f64,
    #[arg(long, default_value_t = 2.0)]
    pub gamma2: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct PbPowerArgs {
    #[arg(long)]
    pub seed: u64,
    /// Comma-separated dimensions
    #[arg(long, default_value = "50,100,200")]
    pub dims: String,
    /// Comma-separated Beta shape-1 values
    #[arg(long, default_value = "2,2.5,3,3.5,4")]
    pub gamma1s: String,
    #[arg(long, default_value_t = 2.0)]
    pub gamma2: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, default_value_t = 300)]
    pub replicates: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Independent Bernoulli(q) coordinates
    Independent(GenIndependentArgs),
    /// Exchangeable equicorrelated multivariate Bernoulli
    Equicorrelated(GenEquicorrelatedArgs),
    /// Joint with common pairwise odds ratio (iterative proportional fit)
    OddsRatio(GenOddsRatioArgs),
    /// Rows with independent Bernoulli(q_i), q_i drawn from a Beta law
    PoissonBinomial(GenPoissonBinomialArgs),
    /// A random phantom image as a point list
    Phantom(GenPhantomArgs),
}

#[derive(Args, Debug)]
pub struct GenIndependentArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct GenEquicorrelatedArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    #[arg(long)]
    pub corr: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct GenOddsRatioArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub gamma: f64,
    #[arg(long, default_value_t = 10_000)]
    pub ipf_iters: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub ipf_tol: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct GenPoissonBinomialArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2.0)]
    pub gamma1: f64,
    #[arg(long, default_value_t = 2.0)]
    pub gamma2: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct GenPhantomArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub scenario: u8,
    /// Which class of the scenario to draw (0 or 1)
    #[arg(long = "class", default_value_t = 0)]
    pub image_class: u8,
    /// Render filled disks instead of outlines
    #[arg(long, default_value_t = false)]
    pub disk: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Benchmark study to reproduce (1–4)
    #[arg(long)]
    pub example: u8,
    /// Scale factor on replicate counts / sample sizes
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}
