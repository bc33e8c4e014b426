use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::compensated_sum;
use crate::spaces::{cos_theta, sample_point, volume, PointSet, RadialMeasure, Sampler};

/// Smallest accepted Monte Carlo sample count.
pub const MIN_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: usize,
}

/// Unbiased estimate of `∫∫ (#(B(y, r) ∩ D) - N v(r))^2 dμ(y) dξ(r)`.
///
/// Sample `k` draws `y` uniformly and `r` from `ξ / ξ([0, π])` using its own
/// ChaCha8 stream `(seed, k)`, so the estimate is independent of the thread
/// schedule. The mean is rescaled by the total mass of `ξ` (2 for `ξ♮`).
pub fn lambda_monte_carlo(
    ps: &PointSet,
    xi: &RadialMeasure,
    samples: usize,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    let space = ps.space();
    if !space.supports_uniform_sampling() {
        return Err(Error::UnsupportedSampler {
            sampler: Sampler::Uniform.name().into(),
            space: space.label(),
        });
    }
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidConfig(format!(
            "at least {MIN_SAMPLES} Monte Carlo samples are required, got {samples}"
        )));
    }
    xi.validate()?;
    let mass = xi.total_mass();
    if !(mass > 0.0) {
        return Err(Error::InvalidMeasure("measure has zero mass".into()));
    }
    let n = ps.len() as f64;
    let values = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let y = sample_point(space, Sampler::Uniform, &mut rng)?;
            let r = xi.sample_radius(&mut rng)?;
            let cos_r = r.cos();
            let mut count = 0usize;
            for x in ps.points() {
                if cos_theta(x, &y)? >= cos_r {
                    count += 1;
                }
            }
            let dev = count as f64 - n * volume(space, r)?;
            Ok(dev * dev)
        })
        .collect::<Result<Vec<f64>>>()?;
    let m = samples as f64;
    let mean = compensated_sum(values.iter().copied()) / m;
    let var = compensated_sum(values.iter().map(|v| (v - mean) * (v - mean))) / (m - 1.0);
    Ok(MonteCarloEstimate {
        estimate: mass * mean,
        std_error: mass * (var / m).sqrt(),
        samples,
    })
}
