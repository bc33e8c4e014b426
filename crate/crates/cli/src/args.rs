use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use invlab::spaces::{Sampler, SpaceDescriptor};

use crate::output::Format;

const GRID: &str = "0.5,1,1.5,2,4,8";

#[derive(Debug, Parser)]
#[command(
    name = "invlab",
    version,
    about = "Distance-sum invariance checks on spheres and projective spaces"
)]
pub struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "INVLAB_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// γ, ⟨τ⟩, ⟨θ^Δ(ξ♮)⟩, m_1 and κ for a list of spaces
    Constants(ConstantsArgs),
    /// Check γ λ[ξ♮] + τ-sum = ⟨τ⟩ N² on a seeded random point set
    Verify(VerifyArgs),
    /// Jacobi square-integral identity, quadrature against closed form
    JacobiCheck(JacobiArgs),
    /// Terminating 3F2 sums against Watson's closed form
    WatsonCheck(WatsonArgs),
    /// Ball discrepancy of a point-set file for a radial measure
    Discrepancy(DiscrepancyArgs),
    /// Maximize the distance sum over N-point configurations
    Optimize(OptimizeArgs),
    /// l, m_l, M_l, C_l, A_l(ξ♮), b_l for l = 0..=lmax
    DimsTable(DimsArgs),
    /// Coefficient dump for an arbitrary radial measure
    Coeffs(CoeffsArgs),
    /// Write a seeded random point set
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (default: stdout)
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    /// Spaces such as S2, RP3, CP2, HP4, OP2 (repeat or comma-separate)
    #[arg(long = "space", value_delimiter = ',')]
    pub spaces: Vec<SpaceDescriptor>,
    /// Standard list: S2-S4, RP/CP/HP 2-5 and OP2 (also used when no space is given)
    #[arg(long)]
    pub all: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "space", value_delimiter = ',', required = true)]
    pub spaces: Vec<SpaceDescriptor>,
    #[arg(long = "n-points", short = 'n')]
    pub n_points: usize,
    #[arg(long, default_value_t = 2000)]
    pub trunc: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-3)]
    pub threshold: f64,
    /// Point sampler (default: uniform, chart for OP2)
    #[arg(long)]
    pub sampler: Option<Sampler>,
    /// Add a Monte Carlo estimate with this many samples
    #[arg(long)]
    pub mc_samples: Option<usize>,
    /// Fill the runtime_ms CSV column (makes output run-dependent)
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct JacobiArgs {
    #[arg(long, value_delimiter = ',', default_value = GRID)]
    pub alpha: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = GRID)]
    pub beta: Vec<f64>,
    #[arg(long, default_value_t = 20)]
    pub lmax: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WatsonArgs {
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 6)]
    pub lmax: usize,
    #[arg(long, default_value_t = 1e-11)]
    pub tolerance: f64,
    /// Number of condition-violating cases that must be rejected
    #[arg(long, default_value_t = 20)]
    pub violations: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DiscrepancyArgs {
    /// Point-set JSON file
    #[arg(long)]
    pub points: PathBuf,
    /// natural | atoms:r1:m1,r2:m2,... | table:<path>
    #[arg(long, default_value = "natural")]
    pub xi: String,
    #[arg(long, default_value_t = 2000)]
    pub trunc: usize,
    #[arg(long)]
    pub mc_samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[arg(long)]
    pub space: SpaceDescriptor,
    #[arg(long = "n-points", short = 'n')]
    pub n_points: usize,
    #[arg(long, default_value_t = 200)]
    pub iterations: usize,
    #[arg(long, default_value_t = 0.1)]
    pub step_size: f64,
    #[arg(long, default_value_t = 4)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.0)]
    pub tolerance: f64,
    /// Record the invariance residual every this many iterations (0: never)
    #[arg(long, default_value_t = 10)]
    pub check_every: usize,
    /// Truncation degree of the residual check
    #[arg(long, default_value_t = 2000)]
    pub trunc: usize,
    /// Point-set JSON output (default: stdout)
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// History CSV output (iteration, tau_sum, residual_rel)
    #[arg(long)]
    pub history: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long)]
    pub space: SpaceDescriptor,
    #[arg(long, default_value_t = 10)]
    pub lmax: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long)]
    pub space: SpaceDescriptor,
    #[arg(long, default_value_t = 2000)]
    pub trunc: usize,
    #[arg(long, default_value = "natural")]
    pub xi: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub space: SpaceDescriptor,
    #[arg(long = "n-points", short = 'n')]
    pub n_points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// uniform | chart (default: uniform, chart for OP2)
    #[arg(long)]
    pub sampler: Option<Sampler>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
