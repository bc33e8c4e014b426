use rand::Rng;
use rand_distr::StandardNormal;

use super::{Trace, COINCIDENCE_TAU, JITTER};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::optimize::OptimizerConfig;
use crate::spaces::{tau, Point};

const MAX_HALVINGS: usize = 30;
const GROWTH: f64 = 1.5;

fn inner(x: &[AlgebraElement], y: &[AlgebraElement]) -> AlgebraElement {
    x.iter()
        .zip(y)
        .fold(AlgebraElement::zero(x[0].algebra()), |acc, (a, b)| acc + a.conj() * *b)
}

/// `√((1 - c)/2)` with `c` the unclamped cosine of the representatives.
fn raw_tau(p: &Point, q: &Point) -> Result<f64> {
    let c = match (p, q) {
        (Point::Sphere(x), Point::Sphere(y)) => x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>(),
        (Point::Proj(x), Point::Proj(y)) => 2.0 * inner(x, y).norm_sqr() - 1.0,
        _ => return Err(Error::InvalidConfig("gradients need sphere or RP/CP/HP points".into())),
    };
    Ok((0.5 * (1.0 - c)).max(0.0).sqrt())
}

/// `Σ_{i≠j} √((1 - cos θ_ij)/2)` as a function of the (not necessarily unit)
/// representatives.
pub fn tau_sum_objective(points: &[Point]) -> Result<f64> {
    let mut total = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            total += 2.0 * raw_tau(p, q)?;
        }
    }
    Ok(total)
}

/// Euclidean gradient of [`tau_sum_objective`] with respect to the flat
/// representative coordinates. Pairs closer than [`COINCIDENCE_TAU`] are
/// skipped.
///
/// Spheres: `∂τ/∂x = -y / (4τ)`. Projective: with `g = ⟨x, y⟩`,
/// `∂τ/∂x_k = -y_k ḡ / τ`.
pub fn tau_sum_gradient(points: &[Point]) -> Result<Vec<Vec<f64>>> {
    let mut grad: Vec<Vec<f64>> = points.iter().map(|p| vec![0.0; p.to_flat().len()]).collect();
    for i in 0..points.len() {
        for j in 0..points.len() {
            if i == j {
                continue;
            }
            let t = raw_tau(&points[i], &points[j])?;
            if t < COINCIDENCE_TAU {
                continue;
            }
            match (&points[i], &points[j]) {
                (Point::Sphere(_), Point::Sphere(y)) => {
                    for (g, v) in grad[i].iter_mut().zip(y) {
                        *g -= v / (2.0 * t);
                    }
                }
                (Point::Proj(x), Point::Proj(y)) => {
                    let gc = inner(x, y).conj();
                    let dim = x[0].algebra().dim();
                    for (k, yk) in y.iter().enumerate() {
                        let term = *yk * gc;
                        for (c, v) in term.coeffs().iter().enumerate() {
                            grad[i][k * dim + c] -= 2.0 * v / t;
                        }
                    }
                }
                _ => unreachable!("checked by raw_tau"),
            }
        }
    }
    Ok(grad)
}

fn rebuild(template: &Point, flat: &[f64]) -> Point {
    let norm = flat.iter().map(|v| v * v).sum::<f64>().sqrt();
    let unit: Vec<f64> = flat.iter().map(|v| v / norm).collect();
    match template {
        Point::Sphere(_) => Point::Sphere(unit),
        Point::Proj(x) => {
            let alg = x[0].algebra();
            Point::Proj(
                unit.chunks(alg.dim())
                    .map(|c| AlgebraElement::new(alg, c).expect("chunk of algebra size"))
                    .collect(),
            )
        }
        Point::Jordan(_) => unreachable!("no gradient mode on OP2"),
    }
}

pub(crate) fn exact_tau_sum(points: &[Point]) -> Result<f64> {
    let mut total = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            total += 2.0 * tau(p, q)?;
        }
    }
    Ok(total)
}

/// Moves the later point of every coincident pair by a Gaussian jitter of
/// size [`JITTER`].
fn break_coincidences<R: Rng + ?Sized>(points: &mut [Point], rng: &mut R) -> Result<bool> {
    let mut moved = false;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if tau(&points[i], &points[j])? < COINCIDENCE_TAU {
                let flat: Vec<f64> = points[j]
                    .to_flat()
                    .iter()
                    .map(|v| v + JITTER * rng.sample::<f64, _>(StandardNormal))
                    .collect();
                points[j] = rebuild(&points[j], &flat);
                moved = true;
            }
        }
    }
    Ok(moved)
}

fn tangent(point: &Point, grad: &[f64]) -> Vec<f64> {
    let x = point.to_flat();
    let radial: f64 = x.iter().zip(grad).map(|(a, b)| a * b).sum();
    grad.iter().zip(&x).map(|(g, v)| g - radial * v).collect()
}

/// Projected gradient ascent with a backtracking step. The step size is the
/// largest displacement of any single representative.
pub(crate) fn gradient_ascent<R: Rng + ?Sized>(
    mut points: Vec<Point>,
    cfg: &OptimizerConfig,
    rng: &mut R,
    trace: &mut Trace<'_>,
) -> Result<Vec<Point>> {
    break_coincidences(&mut points, rng)?;
    let mut value = exact_tau_sum(&points)?;
    trace.record(0, value, &points)?;
    let mut step = cfg.step_size;
    for iteration in 1..=cfg.iterations {
        let grad = tau_sum_gradient(&points)?;
        let dirs: Vec<Vec<f64>> = points.iter().zip(&grad).map(|(p, g)| tangent(p, g)).collect();
        let scale = dirs
            .iter()
            .map(|d| d.iter().map(|v| v * v).sum::<f64>().sqrt())
            .fold(0.0, f64::max);
        if scale == 0.0 {
            break;
        }
        let mut accepted = None;
        for _ in 0..=MAX_HALVINGS {
            let candidate: Vec<Point> = points
                .iter()
                .zip(&dirs)
                .map(|(p, d)| {
                    let flat: Vec<f64> =
                        p.to_flat().iter().zip(d).map(|(x, g)| x + step / scale * g).collect();
                    rebuild(p, &flat)
                })
                .collect();
            let candidate_value = exact_tau_sum(&candidate)?;
            if candidate_value > value {
                accepted = Some((candidate, candidate_value));
                break;
            }
            step /= 2.0;
        }
        let Some((candidate, candidate_value)) = accepted else {
            break;
        };
        let improvement = candidate_value - value;
        points = candidate;
        value = candidate_value;
        if break_coincidences(&mut points, rng)? {
            value = exact_tau_sum(&points)?;
        }
        step *= GROWTH;
        trace.record(iteration, value, &points)?;
        if improvement < cfg.tolerance {
            break;
        }
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{sample, Sampler, SpaceDescriptor};

    #[test]
    fn gradient_matches_central_differences() {
        let h = 1e-6;
        for label in ["S2", "S4", "RP3", "CP2", "HP2"] {
            let s: SpaceDescriptor = label.parse().unwrap();
            let points = sample(&s, Sampler::Uniform, 6, 21).unwrap().into_points();
            let grad = tau_sum_gradient(&points).unwrap();
            for i in 0..points.len() {
                let flat = points[i].to_flat();
                for k in 0..flat.len() {
                    let shifted = |delta: f64| {
                        let mut f = flat.clone();
                        f[k] += delta;
                        let mut pts = points.clone();
                        pts[i] = match &points[i] {
                            Point::Sphere(_) => Point::Sphere(f),
                            Point::Proj(x) => {
                                let alg = x[0].algebra();
                                Point::Proj(f.chunks(alg.dim()).map(|c| AlgebraElement::new(alg, c).unwrap()).collect())
                            }
                            Point::Jordan(_) => unreachable!(),
                        };
                        tau_sum_objective(&pts).unwrap()
                    };
                    let fd = (shifted(h) - shifted(-h)) / (2.0 * h);
                    let g = grad[i][k];
                    let scale = g.abs().max(1.0);
                    assert!((fd - g).abs() <= 1e-5 * scale, "{label} point {i} coord {k}: {g} vs {fd}");
                }
            }
        }
    }
}
