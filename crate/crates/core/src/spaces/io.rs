//! Point-set files.
//!
//! ```json
//! {
//!   "space": {"family": "ComplexProj", "n": 2, "d": 4, "d0": 2},
//!   "points": [[0.6, 0.0, 0.8, 0.0, 0.0, 0.0], ...],
//!   "provenance": {"sampler": "uniform", "seed": 7, "uniform": true}
//! }
//! ```
//!
//! Layouts: spheres store `d+1` reals; `RP^n`, `CP^n`, `HP^n` store the
//! `n+1` algebra coordinates of the representative, `d0` reals each;
//! `OP^2` stores 27 reals (diagonal, then `x01`, `x02`, `x12`).

use serde::{Deserialize, Serialize};

use super::descriptor::{make_space, Family, SpaceDescriptor};
use super::point::{Point, PointSet, Provenance};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub family: Family,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d0: Option<u32>,
}

impl From<&SpaceDescriptor> for SpaceFile {
    fn from(s: &SpaceDescriptor) -> Self {
        Self {
            family: s.family(),
            n: s.n(),
            d: Some(s.d()),
            d0: Some(s.d0()),
        }
    }
}

impl SpaceFile {
    pub fn descriptor(&self) -> Result<SpaceDescriptor> {
        let space = match self.family {
            Family::Sphere => {
                let d = self.d.ok_or_else(|| {
                    Error::Format("sphere entries need the dimension `d`".into())
                })?;
                make_space(Family::Sphere, d)?
            }
            f => make_space(f, self.n)?,
        };
        let mismatch = |what: &str, got: u32, want: u32| {
            Error::Format(format!("`{what}` = {got} does not match {} ({want})", space.label()))
        };
        if let Some(d) = self.d.filter(|&d| d != space.d()) {
            return Err(mismatch("d", d, space.d()));
        }
        if let Some(d0) = self.d0.filter(|&d0| d0 != space.d0()) {
            return Err(mismatch("d0", d0, space.d0()));
        }
        Ok(space)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSetFile {
    pub space: SpaceFile,
    pub points: Vec<Vec<f64>>,
    pub provenance: Provenance,
}

impl From<&PointSet> for PointSetFile {
    fn from(ps: &PointSet) -> Self {
        Self {
            space: ps.space().into(),
            points: ps.points().iter().map(Point::to_flat).collect(),
            provenance: ps.provenance().clone(),
        }
    }
}

impl PointSetFile {
    pub fn into_point_set(self) -> Result<PointSet> {
        let space = self.space.descriptor()?;
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, flat)| {
                Point::from_flat(&space, flat).map_err(|e| Error::InvalidPoint(format!("point {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(space, points, self.provenance)
    }
}

impl PointSet {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: PointSetFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        file.into_point_set()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PointSetFile::from(self)).expect("point sets serialize")
    }
}
