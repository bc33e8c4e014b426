use std::f64::consts::PI;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::gauss_legendre;

/// Finite measure on the radii `[0, π]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RadialMeasure {
    /// `dξ♮(r) = sin r dr`, total mass 2.
    SinDensity,
    /// Point masses `(r, mass)`.
    Atoms(Vec<(f64, f64)>),
    /// Piecewise-linear density through `(radii[i], density[i])`, zero
    /// outside `[radii[0], radii[last]]`.
    Tabulated { radii: Vec<f64>, density: Vec<f64> },
}

fn check_radius(r: f64) -> Result<()> {
    if (0.0..=PI).contains(&r) {
        Ok(())
    } else {
        Err(Error::InvalidMeasure(format!("radius {r} outside [0, pi]")))
    }
}

fn check_weight(w: f64) -> Result<()> {
    if w.is_finite() && w >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidMeasure(format!("negative or non-finite weight {w}")))
    }
}

impl RadialMeasure {
    pub fn natural() -> Self {
        RadialMeasure::SinDensity
    }

    pub fn atoms(atoms: Vec<(f64, f64)>) -> Result<Self> {
        let m = RadialMeasure::Atoms(atoms);
        m.validate()?;
        Ok(m)
    }

    pub fn atom(r: f64, mass: f64) -> Result<Self> {
        Self::atoms(vec![(r, mass)])
    }

    pub fn tabulated(radii: Vec<f64>, density: Vec<f64>) -> Result<Self> {
        let m = RadialMeasure::Tabulated { radii, density };
        m.validate()?;
        Ok(m)
    }

    /// Parses a two-column `r,density` table. Blank lines, `#` comments and
    /// a non-numeric header line are skipped.
    pub fn from_table_csv(text: &str) -> Result<Self> {
        let mut radii = Vec::new();
        let mut density = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            let parsed = match cols.as_slice() {
                [r, p] => r.parse::<f64>().ok().zip(p.parse::<f64>().ok()),
                _ => None,
            };
            match parsed {
                Some((r, p)) => {
                    radii.push(r);
                    density.push(p);
                }
                None if radii.is_empty() && i == 0 => continue,
                None => {
                    return Err(Error::InvalidMeasure(format!(
                        "line {}: expected `r,density`",
                        i + 1
                    )))
                }
            }
        }
        Self::tabulated(radii, density)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RadialMeasure::SinDensity => Ok(()),
            RadialMeasure::Atoms(atoms) => {
                for &(r, m) in atoms {
                    check_radius(r)?;
                    check_weight(m)?;
                }
                Ok(())
            }
            RadialMeasure::Tabulated { radii, density } => {
                if radii.len() != density.len() || radii.len() < 2 {
                    return Err(Error::InvalidMeasure(
                        "a density table needs at least two (r, density) rows".into(),
                    ));
                }
                for (&r, &p) in radii.iter().zip(density) {
                    check_radius(r)?;
                    check_weight(p)?;
                }
                if radii.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(Error::InvalidMeasure(
                        "table radii must be strictly increasing".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    pub fn is_natural(&self) -> bool {
        matches!(self, RadialMeasure::SinDensity)
    }

    pub fn total_mass(&self) -> f64 {
        match self {
            RadialMeasure::SinDensity => 2.0,
            RadialMeasure::Atoms(atoms) => atoms.iter().map(|a| a.1).sum(),
            RadialMeasure::Tabulated { radii, density } => radii
                .windows(2)
                .zip(density.windows(2))
                .map(|(r, p)| 0.5 * (r[1] - r[0]) * (p[0] + p[1]))
                .sum(),
        }
    }

    /// Nodes and weights `(r_k, w_k)` with `∫ f dξ ≈ Σ w_k f(r_k)`.
    ///
    /// Densities use Gauss–Legendre in `r` with about `nodes` points in
    /// total (split evenly over the linear pieces of a table); atoms are
    /// returned as they are.
    pub fn discretize(&self, nodes: usize) -> Result<Vec<(f64, f64)>> {
        match self {
            RadialMeasure::SinDensity => {
                let rule = gauss_legendre(nodes.max(1))?;
                Ok(rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(&x, &w)| {
                        let r = 0.5 * PI * (x + 1.0);
                        (r, 0.5 * PI * w * r.sin())
                    })
                    .collect())
            }
            RadialMeasure::Atoms(atoms) => Ok(atoms.clone()),
            RadialMeasure::Tabulated { radii, density } => {
                let pieces = radii.len() - 1;
                let per_piece = nodes.div_ceil(pieces).max(8);
                let rule = gauss_legendre(per_piece)?;
                let mut out = Vec::with_capacity(pieces * per_piece);
                for (r, p) in radii.windows(2).zip(density.windows(2)) {
                    let half = 0.5 * (r[1] - r[0]);
                    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
                        let s = 0.5 * (x + 1.0);
                        out.push((r[0] + 2.0 * half * s, half * w * (p[0] + (p[1] - p[0]) * s)));
                    }
                }
                Ok(out)
            }
        }
    }

    /// `∫ f dξ` using [`discretize`](Self::discretize) with `nodes` points.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, nodes: usize, mut f: F) -> Result<f64> {
        Ok(self
            .discretize(nodes)?
            .into_iter()
            .map(|(r, w)| w * f(r))
            .sum())
    }

    /// Draws a radius from the normalized measure `ξ / ξ([0, π])`.
    pub fn sample_radius<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<f64> {
        let mass = self.total_mass();
        if mass <= 0.0 {
            return Err(Error::InvalidMeasure("measure has zero mass".into()));
        }
        let u: f64 = rng.random();
        match self {
            RadialMeasure::SinDensity => Ok((1.0 - 2.0 * u).clamp(-1.0, 1.0).acos()),
            RadialMeasure::Atoms(atoms) => {
                let target = u * mass;
                let mut acc = 0.0;
                for &(r, m) in atoms {
                    acc += m;
                    if target < acc {
                        return Ok(r);
                    }
                }
                Ok(atoms.iter().rev().find(|a| a.1 > 0.0).expect("positive mass").0)
            }
            RadialMeasure::Tabulated { radii, density } => {
                let mut target = u * mass;
                let pieces = radii.windows(2).zip(density.windows(2));
                let last = radii.len() - 2;
                for (k, (r, p)) in pieces.enumerate() {
                    let h = r[1] - r[0];
                    let piece = 0.5 * h * (p[0] + p[1]);
                    if target < piece || k == last {
                        let c = target.min(piece);
                        let a = (p[1] - p[0]) / (2.0 * h);
                        let b = p[0];
                        let disc = (b * b + 4.0 * a * c).max(0.0);
                        let s = if c == 0.0 { 0.0 } else { 2.0 * c / (b + disc.sqrt()) };
                        return Ok((r[0] + s.min(h)).clamp(0.0, PI));
                    }
                    target -= piece;
                }
                unreachable!("table has at least one piece")
            }
        }
    }
}

impl FromStr for RadialMeasure {
    type Err = Error;

    /// Parses `natural` or `atoms:r1:m1,r2:m2,...`. Tables are read with
    /// [`RadialMeasure::from_table_csv`].
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "natural" {
            return Ok(RadialMeasure::SinDensity);
        }
        let Some(list) = s.strip_prefix("atoms:") else {
            return Err(Error::InvalidMeasure(format!(
                "expected `natural`, `atoms:r:m,...` or `table:<path>`, got `{s}`"
            )));
        };
        let atoms = list
            .split(',')
            .map(|item| {
                let (r, m) = item
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidMeasure(format!("bad atom `{item}`")))?;
                let parse = |v: &str| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::InvalidMeasure(format!("bad number `{v}`")))
                };
                Ok((parse(r)?, parse(m)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::atoms(atoms)
    }
}
