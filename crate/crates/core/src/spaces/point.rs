use serde::{Deserialize, Serialize};

use super::descriptor::{Family, SpaceDescriptor};
use crate::algebra::{AlgebraElement, JordanHermitian3, IDEMPOTENCY_TOLERANCE};
use crate::error::{Error, Result};

/// Accepted deviation of a representative's squared norm from 1.
const NORM_TOLERANCE: f64 = 2e-12;

/// A point of some `Q(d, d0)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    /// Unit vector in `R^{d+1}`.
    Sphere(Vec<f64>),
    /// Unit vector in `F^{n+1}`, up to a right unit scalar.
    Proj(Vec<AlgebraElement>),
    /// Trace-one idempotent of `H_3(O)`.
    Jordan(JordanHermitian3),
}

impl Point {
    /// Flat real layout used by point-set files.
    pub fn to_flat(&self) -> Vec<f64> {
        match self {
            Point::Sphere(x) => x.clone(),
            Point::Proj(x) => x.iter().flat_map(|e| e.coeffs().to_vec()).collect(),
            Point::Jordan(x) => x.to_flat(),
        }
    }

    /// Rebuilds a point of `space` from its flat layout and validates it.
    pub fn from_flat(space: &SpaceDescriptor, values: &[f64]) -> Result<Self> {
        let expected = space.representative_len();
        if values.len() != expected {
            return Err(Error::InvalidPoint(format!(
                "{} expects {expected} reals per point, got {}",
                space.label(),
                values.len()
            )));
        }
        let p = match space.family() {
            Family::Sphere => Point::Sphere(values.to_vec()),
            Family::OctProj => Point::Jordan(JordanHermitian3::from_flat(values)?),
            f => {
                let alg = f.algebra().expect("projective family");
                Point::Proj(
                    values
                        .chunks(alg.dim())
                        .map(|c| AlgebraElement::new(alg, c))
                        .collect::<Result<_>>()?,
                )
            }
        };
        p.validate(space)?;
        Ok(p)
    }

    /// Whether the representative has the layout required by `space`.
    pub fn fits(&self, space: &SpaceDescriptor) -> bool {
        match (self, space.family()) {
            (Point::Sphere(x), Family::Sphere) => x.len() == space.d() as usize + 1,
            (Point::Jordan(_), Family::OctProj) => true,
            (Point::Proj(x), f) if f != Family::Sphere && f != Family::OctProj => {
                x.len() == space.n() as usize + 1
                    && x.iter().all(|e| Some(e.algebra()) == f.algebra())
            }
            _ => false,
        }
    }

    /// Checks layout, finiteness, unit norm and (for `OP^2`) idempotency.
    pub fn validate(&self, space: &SpaceDescriptor) -> Result<()> {
        if !self.fits(space) {
            return Err(Error::InvalidPoint(format!(
                "representative does not match the layout of {}",
                space.label()
            )));
        }
        if self.to_flat().iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPoint("non-finite coordinate".into()));
        }
        let norm_sqr: f64 = match self {
            Point::Sphere(x) => x.iter().map(|v| v * v).sum(),
            Point::Proj(x) => x.iter().map(AlgebraElement::norm_sqr).sum(),
            Point::Jordan(x) => return x.check_idempotent(IDEMPOTENCY_TOLERANCE),
        };
        if (norm_sqr - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidPoint(format!(
                "representative norm^2 = {norm_sqr} is not 1"
            )));
        }
        Ok(())
    }
}

/// Where a point set came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub sampler: String,
    pub seed: Option<u64>,
    /// `false` when the sampler is not the invariant measure.
    #[serde(default = "default_true")]
    pub uniform: bool,
}

fn default_true() -> bool {
    true
}

impl Provenance {
    pub fn new(sampler: impl Into<String>, seed: Option<u64>, uniform: bool) -> Self {
        Self {
            sampler: sampler.into(),
            seed,
            uniform,
        }
    }

    pub fn manual() -> Self {
        Self::new("manual", None, false)
    }
}

/// Ordered list of points of a single space.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    space: SpaceDescriptor,
    points: Vec<Point>,
    provenance: Provenance,
}

impl PointSet {
    /// Validates every point against `space`.
    pub fn new(space: SpaceDescriptor, points: Vec<Point>, provenance: Provenance) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            p.validate(&space)
                .map_err(|e| Error::InvalidPoint(format!("point {i}: {e}")))?;
        }
        Ok(Self {
            space,
            points,
            provenance,
        })
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Same points in the order given by `order` (indices into `self`).
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let points = order
            .iter()
            .map(|&i| {
                self.points
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidConfig(format!("index {i} out of range")))
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            points,
            ..self.clone()
        })
    }
}
