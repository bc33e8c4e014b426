use rayon::prelude::*;

use crate::error::Result;
use crate::harmonic::KernelExpansion;
use crate::numeric::{compensated_sum, CompensatedSum};
use crate::spaces::{cos_theta, tau, Point, PointSet, RadialMeasure};

/// `Σ_{i,j} f(x_i, x_j)` for a symmetric `f`, as `N·diag + 2 Σ_{i<j}`.
///
/// Rows are summed in parallel and reduced in row order, so the result does
/// not depend on the number of threads.
fn symmetric_pair_sum<F>(points: &[Point], diag: f64, f: F) -> Result<f64>
where
    F: Fn(&Point, &Point) -> Result<f64> + Sync,
{
    let rows = (0..points.len())
        .into_par_iter()
        .map(|i| {
            let mut acc = CompensatedSum::new();
            for q in &points[i + 1..] {
                acc.add(f(&points[i], q)?);
            }
            Ok(acc.value())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(points.len() as f64 * diag + 2.0 * compensated_sum(rows))
}

/// `τ[D] = Σ_{i,j} τ(x_i, x_j)` over ordered pairs.
pub fn tau_sum(ps: &PointSet) -> Result<f64> {
    symmetric_pair_sum(ps.points(), 0.0, tau)
}

/// `Σ_{i,j} Σ_{l ≤ L} b_l φ_l(cos θ_ij)` for a prebuilt expansion.
pub fn kernel_sum(ps: &PointSet, kernel: &KernelExpansion) -> Result<f64> {
    symmetric_pair_sum(ps.points(), kernel.kernel(1.0), |p, q| {
        Ok(kernel.kernel(cos_theta(p, q)?))
    })
}

/// `Σ_{i,j} Σ_{l ≤ L} b_l (1 - φ_l(cos θ_ij))`, the truncated `θ^Δ[ξ, D]`.
pub fn sym_diff_sum(ps: &PointSet, kernel: &KernelExpansion) -> Result<f64> {
    symmetric_pair_sum(ps.points(), 0.0, |p, q| Ok(kernel.sym_diff(cos_theta(p, q)?)))
}

/// Truncated series value of `λ[ξ, D]` and its tail bound `N^2 · tail`.
pub fn lambda_series(ps: &PointSet, xi: &RadialMeasure, truncation: usize) -> Result<(f64, f64)> {
    let kernel = KernelExpansion::build(ps.space(), xi, truncation)?;
    let n = ps.len() as f64;
    Ok((kernel_sum(ps, &kernel)?, n * n * kernel.tail_bound()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{sample, Provenance, Sampler, SpaceDescriptor};
    use approx::assert_relative_eq;

    #[test]
    fn small_sums() {
        let s2: SpaceDescriptor = "S2".parse().unwrap();
        let a = Point::Sphere(vec![0.0, 0.0, 1.0]);
        let b = Point::Sphere(vec![0.0, 0.0, -1.0]);
        let one = PointSet::new(s2, vec![a.clone()], Provenance::manual()).unwrap();
        assert_eq!(tau_sum(&one).unwrap(), 0.0);
        let two = PointSet::new(s2, vec![a, b], Provenance::manual()).unwrap();
        assert_eq!(tau_sum(&two).unwrap(), 2.0);
    }

    #[test]
    fn matches_brute_force_double_loop() {
        let s: SpaceDescriptor = "HP2".parse().unwrap();
        let ps = sample(&s, Sampler::Uniform, 25, 8).unwrap();
        let mut brute = 0.0;
        for p in ps.points() {
            for q in ps.points() {
                brute += tau(p, q).unwrap();
            }
        }
        assert_relative_eq!(tau_sum(&ps).unwrap(), brute, max_relative = 1e-13);
    }
}
