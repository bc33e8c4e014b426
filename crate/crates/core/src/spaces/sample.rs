use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::descriptor::{Family, SpaceDescriptor};
use super::point::{Point, PointSet, Provenance};
use crate::algebra::{AlgebraElement, DivisionAlgebra, JordanHermitian3};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampler {
    /// Normalized Gaussian vectors; exact invariant measure on spheres and
    /// on `RP^n`, `CP^n`, `HP^n`.
    Uniform,
    /// Random chart index and Gaussian chart coordinates on `OP^2`; not the
    /// invariant measure.
    Chart,
}

impl Sampler {
    pub fn name(self) -> &'static str {
        match self {
            Sampler::Uniform => "uniform",
            Sampler::Chart => "chart",
        }
    }
}

impl fmt::Display for Sampler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sampler {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Sampler::Uniform),
            "chart" => Ok(Sampler::Chart),
            other => Err(Error::InvalidConfig(format!("unknown sampler `{other}`"))),
        }
    }
}

fn gaussian_unit<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..len).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-100 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

fn gaussian_octonion<R: Rng + ?Sized>(rng: &mut R) -> AlgebraElement {
    let c: Vec<f64> = (0..8).map(|_| rng.sample(StandardNormal)).collect();
    AlgebraElement::new(DivisionAlgebra::Octonion, &c).expect("eight coefficients")
}

/// Draws one point of `space`.
pub fn sample_point<R: Rng + ?Sized>(
    space: &SpaceDescriptor,
    sampler: Sampler,
    rng: &mut R,
) -> Result<Point> {
    let unsupported = || Error::UnsupportedSampler {
        sampler: sampler.name().into(),
        space: space.label(),
    };
    match (space.family(), sampler) {
        (Family::OctProj, Sampler::Chart) => {
            let chart = rng.random_range(0..3);
            let a = gaussian_octonion(rng);
            let b = gaussian_octonion(rng);
            Ok(Point::Jordan(JordanHermitian3::from_chart(chart, a, b)?))
        }
        (Family::OctProj, Sampler::Uniform) | (_, Sampler::Chart) => Err(unsupported()),
        (Family::Sphere, Sampler::Uniform) => {
            Ok(Point::Sphere(gaussian_unit(space.d() as usize + 1, rng)))
        }
        (family, Sampler::Uniform) => {
            let alg = family.algebra().expect("projective family");
            let flat = gaussian_unit(space.representative_len(), rng);
            Ok(Point::Proj(
                flat.chunks(alg.dim())
                    .map(|c| AlgebraElement::new(alg, c).expect("chunk of algebra size"))
                    .collect(),
            ))
        }
    }
}

/// Draws `count` points from a ChaCha8 stream seeded with `seed`.
pub fn sample(space: &SpaceDescriptor, sampler: Sampler, count: usize, seed: u64) -> Result<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..count)
        .map(|_| sample_point(space, sampler, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let provenance = Provenance::new(sampler.name(), Some(seed), sampler == Sampler::Uniform);
    PointSet::new(*space, points, provenance)
}
