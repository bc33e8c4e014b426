use std::f64::consts::PI;

use super::descriptor::SpaceDescriptor;
use super::point::Point;
use crate::algebra::AlgebraElement;
use crate::error::{domain, Error, Result};
use crate::specfun::beta_reg_split;

/// Raw cosines beyond `±(1 + COS_TOLERANCE)` are rejected as corrupt input.
pub const COS_TOLERANCE: f64 = 1e-9;

fn hermitian_inner(x: &[AlgebraElement], y: &[AlgebraElement]) -> AlgebraElement {
    x.iter()
        .zip(y)
        .fold(AlgebraElement::zero(x[0].algebra()), |acc, (a, b)| acc + a.conj() * *b)
}

/// `cos θ(p, q)`, clamped into `[-1, 1]`.
pub fn cos_theta(p: &Point, q: &Point) -> Result<f64> {
    let raw = match (p, q) {
        (Point::Sphere(x), Point::Sphere(y)) if x.len() == y.len() => {
            x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>()
        }
        (Point::Proj(x), Point::Proj(y))
            if x.len() == y.len() && !x.is_empty() && x[0].algebra() == y[0].algebra() =>
        {
            2.0 * hermitian_inner(x, y).norm_sqr() - 1.0
        }
        (Point::Jordan(x), Point::Jordan(y)) => 2.0 * x.trace_product(y) - 1.0,
        _ => return Err(Error::SpaceMismatch),
    };
    if !(raw.abs() <= 1.0 + COS_TOLERANCE) {
        return Err(Error::InvalidPoint(format!(
            "cos theta = {raw} is outside [-1, 1]; representatives are not normalized"
        )));
    }
    Ok(raw.clamp(-1.0, 1.0))
}

/// Geodesic distance in `[0, π]`.
pub fn theta(p: &Point, q: &Point) -> Result<f64> {
    Ok(cos_theta(p, q)?.acos())
}

/// Chordal distance `τ = sin(θ/2) = √((1 - cos θ)/2)`.
///
/// Evaluated without cancellation near `θ = 0`: `½|x - y|` on spheres,
/// `|y - x⟨x, y⟩|` on `RP^n`, `CP^n`, `HP^n`, and `|X - Y|_F / √2` on `OP^2`.
pub fn tau(p: &Point, q: &Point) -> Result<f64> {
    cos_theta(p, q)?;
    let t = match (p, q) {
        (Point::Sphere(x), Point::Sphere(y)) => {
            0.5 * x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
        }
        (Point::Proj(x), Point::Proj(y)) => {
            let g = hermitian_inner(x, y);
            x.iter()
                .zip(y)
                .map(|(a, b)| (*b - *a * g).norm_sqr())
                .sum::<f64>()
                .sqrt()
        }
        (Point::Jordan(x), Point::Jordan(y)) => {
            let d: f64 = x.diag.iter().zip(&y.diag).map(|(a, b)| (a - b) * (a - b)).sum();
            let o: f64 = x.off.iter().zip(&y.off).map(|(a, b)| (*a - *b).norm_sqr()).sum();
            (0.5 * (d + 2.0 * o)).sqrt()
        }
        _ => unreachable!("layouts checked by cos_theta"),
    };
    Ok(t.min(1.0))
}

/// Normalized volume `v(r)` of a ball of radius `r`, i.e.
/// `I_{sin^2(r/2)}(d/2, d0/2)`.
pub fn volume(space: &SpaceDescriptor, r: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&r) {
        return Err(domain("volume", format!("radius {r} outside [0, pi]")));
    }
    if r == PI {
        return Ok(1.0);
    }
    let s = (0.5 * r).sin();
    let c = (0.5 * r).cos();
    beta_reg_split(space.d() as f64 / 2.0, space.d0() as f64 / 2.0, s * s, c * c)
}
