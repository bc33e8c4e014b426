//! Maximization of the distance sum `τ[D]` over `N`-point configurations,
//! equivalently minimization of the ball discrepancy `λ[ξ♮, D]`.
//!
//! Spheres and `RP^n`, `CP^n`, `HP^n` use projected gradient ascent on unit
//! representatives with a backtracking step; `OP^2` uses a Gaussian
//! perturbation search in chart coordinates. Local search only.

mod gradient;
mod search;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use gradient::{tau_sum_gradient, tau_sum_objective};

use crate::discrepancy::verify_l2_invariance_with;
use crate::error::{Error, Result};
use crate::harmonic::KernelExpansion;
use crate::spaces::{sample_point, Family, Point, PointSet, Provenance, RadialMeasure, Sampler, SpaceDescriptor};

/// Separation below which two points count as coincident.
pub const COINCIDENCE_TAU: f64 = 1e-10;
/// Size of the deterministic jitter that separates coincident points.
pub const JITTER: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub iterations: usize,
    /// Initial step (gradient mode) or perturbation scale (`OP^2`).
    pub step_size: f64,
    pub restarts: usize,
    pub seed: u64,
    /// Stop once an accepted step improves `τ[D]` by no more than this.
    pub tolerance: f64,
    /// Record the invariance residual every this many iterations (0: never).
    pub check_every: usize,
    /// Truncation degree of the residual check.
    pub check_truncation: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            iterations: 200,
            step_size: 0.1,
            restarts: 4,
            seed: 0,
            tolerance: 0.0,
            check_every: 10,
            check_truncation: 2000,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.into()));
        if self.iterations == 0 {
            return bad("iterations must be at least 1");
        }
        if !(self.step_size > 0.0 && self.step_size.is_finite()) {
            return bad("step size must be positive");
        }
        if self.restarts == 0 {
            return bad("restarts must be at least 1");
        }
        if !(self.tolerance >= 0.0) {
            return bad("tolerance must be nonnegative");
        }
        if self.check_every > 0 && self.check_truncation == 0 {
            return bad("residual checks need a truncation degree of at least 1");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub iteration: usize,
    pub tau_sum: f64,
    pub residual_rel: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizeResult {
    pub points: PointSet,
    /// History of the best restart; `tau_sum` is non-decreasing.
    pub history: Vec<HistoryEntry>,
    /// Index of the restart that produced `points`.
    pub restart: usize,
}

/// Running state shared by both search modes.
pub(crate) struct Trace<'a> {
    space: SpaceDescriptor,
    kernel: Option<&'a KernelExpansion>,
    check_every: usize,
    pub(crate) history: Vec<HistoryEntry>,
}

impl Trace<'_> {
    pub(crate) fn record(&mut self, iteration: usize, tau_sum: f64, points: &[Point]) -> Result<()> {
        let residual_rel = match self.kernel {
            Some(k) if iteration.is_multiple_of(self.check_every) => {
                let ps = PointSet::new(self.space, points.to_vec(), Provenance::manual())?;
                Some(verify_l2_invariance_with(&ps, k, None)?.residual_rel)
            }
            _ => None,
        };
        self.history.push(HistoryEntry {
            iteration,
            tau_sum,
            residual_rel,
        });
        Ok(())
    }
}

fn run_restart(
    space: &SpaceDescriptor,
    n: usize,
    cfg: &OptimizerConfig,
    restart: usize,
    kernel: Option<&KernelExpansion>,
) -> Result<(Vec<Point>, Vec<HistoryEntry>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let sampler = if space.family() == Family::OctProj {
        Sampler::Chart
    } else {
        Sampler::Uniform
    };
    let points = (0..n)
        .map(|_| sample_point(space, sampler, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let mut trace = Trace {
        space: *space,
        kernel,
        check_every: cfg.check_every,
        history: Vec::new(),
    };
    let points = if space.family() == Family::OctProj {
        search::perturbation_search(points, cfg, &mut rng, &mut trace)?
    } else {
        gradient::gradient_ascent(points, cfg, &mut rng, &mut trace)?
    };
    Ok((points, trace.history))
}

/// Searches for `n` points of `space` with a large distance sum.
///
/// Restarts run concurrently; restart `k` is seeded from `(cfg.seed, k)` and
/// is itself sequential, so results do not depend on the thread count. The
/// restart with the largest final `τ[D]` wins (lowest index on ties).
pub fn optimize_points(space: &SpaceDescriptor, n: usize, cfg: &OptimizerConfig) -> Result<OptimizeResult> {
    cfg.validate()?;
    if n == 0 {
        return Err(Error::InvalidConfig("need at least one point".into()));
    }
    let kernel = if cfg.check_every > 0 {
        Some(KernelExpansion::build(space, &RadialMeasure::natural(), cfg.check_truncation)?)
    } else {
        None
    };
    let runs = (0..cfg.restarts)
        .into_par_iter()
        .map(|k| run_restart(space, n, cfg, k, kernel.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let final_value = |h: &[HistoryEntry]| h.last().map_or(f64::NEG_INFINITY, |e| e.tau_sum);
    let (restart, (points, history)) = runs
        .into_iter()
        .enumerate()
        .reduce(|best, cur| {
            if final_value(&cur.1 .1) > final_value(&best.1 .1) {
                cur
            } else {
                best
            }
        })
        .expect("at least one restart");
    let sampler = if space.family() == Family::OctProj { "optimize/chart" } else { "optimize/uniform" };
    let provenance = Provenance::new(sampler, Some(cfg.seed), false);
    Ok(OptimizeResult {
        points: PointSet::new(*space, points, provenance)?,
        history,
        restart,
    })
}
