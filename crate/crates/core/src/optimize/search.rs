use rand::Rng;
use rand_distr::StandardNormal;

use super::gradient::exact_tau_sum;
use super::{OptimizerConfig, Trace};
use crate::algebra::{AlgebraElement, DivisionAlgebra, JordanHermitian3};
use crate::error::Result;
use crate::spaces::{tau, Point};

const MIN_SCALE: f64 = 1e-12;

fn jitter<R: Rng + ?Sized>(x: &AlgebraElement, scale: f64, rng: &mut R) -> AlgebraElement {
    let noise: Vec<f64> = (0..8).map(|_| scale * rng.sample::<f64, _>(StandardNormal)).collect();
    *x + AlgebraElement::new(DivisionAlgebra::Octonion, &noise).expect("eight coefficients")
}

/// Gaussian perturbation of the chart coordinates `(a, b)` of one point at a
/// time, keeping moves that increase `τ[D]`. The scale grows by 1.5 after a
/// sweep in which at least a fifth of the moves succeeded and halves
/// otherwise.
pub(crate) fn perturbation_search<R: Rng + ?Sized>(
    mut points: Vec<Point>,
    cfg: &OptimizerConfig,
    rng: &mut R,
    trace: &mut Trace<'_>,
) -> Result<Vec<Point>> {
    let mut value = exact_tau_sum(&points)?;
    trace.record(0, value, &points)?;
    let mut scale = cfg.step_size;
    for iteration in 1..=cfg.iterations {
        let before = value;
        let mut accepted = 0;
        for i in 0..points.len() {
            let Point::Jordan(x) = &points[i] else {
                unreachable!("perturbation search runs on OP2 points")
            };
            let (chart, a, b) = x.chart_coordinates();
            let candidate = Point::Jordan(JordanHermitian3::from_chart(
                chart,
                jitter(&a, scale, rng),
                jitter(&b, scale, rng),
            )?);
            let mut delta = 0.0;
            for (j, q) in points.iter().enumerate() {
                if j != i {
                    delta += 2.0 * (tau(&candidate, q)? - tau(&points[i], q)?);
                }
            }
            if delta > 1e-14 * value.max(1.0) {
                points[i] = candidate;
                accepted += 1;
            }
        }
        if accepted > 0 {
            value = exact_tau_sum(&points)?.max(before);
        }
        scale = if 5 * accepted >= points.len() { scale * 1.5 } else { (scale * 0.5).max(MIN_SCALE) };
        trace.record(iteration, value, &points)?;
        if accepted > 0 && value - before < cfg.tolerance {
            break;
        }
    }
    Ok(points)
}
