use serde::{Deserialize, Serialize};

use super::montecarlo::{lambda_monte_carlo, MonteCarloEstimate};
use super::sums::{kernel_sum, sym_diff_sum, tau_sum};
use crate::error::{Error, Result};
use crate::harmonic::KernelExpansion;
use crate::spaces::{avg_sym_diff, avg_tau, gamma_const, PointSet, RadialMeasure};

/// Outcome of checking `γ λ[ξ♮, D] + τ[D] = ⟨τ⟩ N^2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub space: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "L")]
    pub truncation: usize,
    pub gamma: f64,
    pub avg_tau: f64,
    pub tau_sum: f64,
    pub lambda_series: f64,
    /// `(⟨τ⟩ N^2 - τ[D]) / γ`.
    pub lambda_by_invariance: f64,
    pub lambda_mc: Option<MonteCarloEstimate>,
    /// `|γ λ_L + τ[D] - ⟨τ⟩ N^2| / (⟨τ⟩ N^2)`.
    pub residual_rel: f64,
    /// `γ N^2` times the kernel tail bound.
    pub tail_bound: f64,
    /// `tail_bound / (⟨τ⟩ N^2)`, the largest residual the truncation explains.
    pub residual_bound: f64,
}

impl InvarianceReport {
    pub fn passes(&self, threshold: f64) -> bool {
        self.residual_rel <= threshold
    }
}

/// Checks the L2 invariance identity with a fresh `ξ♮` expansion of degree `L`.
pub fn verify_l2_invariance(ps: &PointSet, truncation: usize) -> Result<InvarianceReport> {
    let kernel = KernelExpansion::build(ps.space(), &RadialMeasure::natural(), truncation)?;
    verify_l2_invariance_with(ps, &kernel, None)
}

/// As [`verify_l2_invariance`] with a prebuilt `ξ♮` expansion, optionally
/// adding a Monte Carlo estimate `(samples, seed)`.
pub fn verify_l2_invariance_with(
    ps: &PointSet,
    kernel: &KernelExpansion,
    monte_carlo: Option<(usize, u64)>,
) -> Result<InvarianceReport> {
    if !kernel.xi().is_natural() || kernel.space() != ps.space() {
        return Err(Error::InvalidConfig(
            "the L2 identity needs the natural-measure expansion of the same space".into(),
        ));
    }
    let space = ps.space();
    let n = ps.len();
    let nn = (n * n) as f64;
    let gamma = gamma_const(space);
    let mean = avg_tau(space);
    let tau = tau_sum(ps)?;
    let lambda = kernel_sum(ps, kernel)?;
    let target = mean * nn;
    let tail_bound = gamma * nn * kernel.tail_bound();
    let lambda_mc = monte_carlo
        .map(|(samples, seed)| lambda_monte_carlo(ps, kernel.xi(), samples, seed))
        .transpose()?;
    Ok(InvarianceReport {
        space: space.label(),
        n,
        truncation: kernel.truncation(),
        gamma,
        avg_tau: mean,
        tau_sum: tau,
        lambda_series: lambda,
        lambda_by_invariance: (target - tau) / gamma,
        lambda_mc,
        residual_rel: (gamma * lambda + tau - target).abs() / target,
        tail_bound,
        residual_bound: tail_bound / target,
    })
}

/// Outcome of checking `λ[ξ, D] + θ^Δ[ξ, D] = ⟨θ^Δ(ξ)⟩ N^2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct L1Report {
    pub space: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "L")]
    pub truncation: usize,
    /// `⟨θ^Δ(ξ)⟩ = ∫ (v - v^2) dξ` by quadrature.
    pub avg_sym_diff: f64,
    pub lambda_series: f64,
    pub sym_diff_series: f64,
    /// `⟨θ^Δ(ξ)⟩ N^2`.
    pub expected: f64,
    /// `|λ_L + θ^Δ_L - expected| / expected` (absolute when `expected = 0`).
    pub residual_rel: f64,
    /// `N^2` times the kernel tail bound.
    pub tail_bound: f64,
    pub residual_bound: f64,
}

pub fn verify_l1_invariance(
    ps: &PointSet,
    xi: &RadialMeasure,
    truncation: usize,
) -> Result<L1Report> {
    let kernel = KernelExpansion::build(ps.space(), xi, truncation)?;
    let n = ps.len();
    let nn = (n * n) as f64;
    let mean = avg_sym_diff(ps.space(), xi)?;
    let lambda = kernel_sum(ps, &kernel)?;
    let sym = sym_diff_sum(ps, &kernel)?;
    let expected = mean * nn;
    let scale = if expected > 0.0 { expected } else { 1.0 };
    let tail_bound = nn * kernel.tail_bound();
    Ok(L1Report {
        space: ps.space().label(),
        n,
        truncation,
        avg_sym_diff: mean,
        lambda_series: lambda,
        sym_diff_series: sym,
        expected,
        residual_rel: (lambda + sym - expected).abs() / scale,
        tail_bound,
        residual_bound: tail_bound / scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{sample, Sampler, SpaceDescriptor};
    use approx::assert_relative_eq;

    #[test]
    fn single_point_reduces_to_the_average() {
        for label in ["S2", "CP2", "OP2"] {
            let s: SpaceDescriptor = label.parse().unwrap();
            let sampler = if label == "OP2" { Sampler::Chart } else { Sampler::Uniform };
            let ps = sample(&s, sampler, 1, 0).unwrap();
            let r = verify_l2_invariance(&ps, 500).unwrap();
            assert_eq!(r.tau_sum, 0.0);
            assert!(r.residual_rel <= r.residual_bound + 1e-12, "{label}: {r:?}");
            assert_relative_eq!(r.lambda_by_invariance, avg_tau(&s) / gamma_const(&s), max_relative = 1e-15);
        }
    }

    #[test]
    fn random_sets_satisfy_the_identity() {
        let s: SpaceDescriptor = "S2".parse().unwrap();
        let ps = sample(&s, Sampler::Uniform, 32, 5).unwrap();
        let r = verify_l2_invariance(&ps, 2000).unwrap();
        assert!(r.residual_rel <= 1e-3 && r.residual_rel <= r.residual_bound + 1e-9, "{r:?}");
    }

    #[test]
    fn l1_identity_for_an_atom() {
        let s: SpaceDescriptor = "S2".parse().unwrap();
        let ps = sample(&s, Sampler::Uniform, 8, 6).unwrap();
        let xi = RadialMeasure::atom(std::f64::consts::FRAC_PI_2, 1.0).unwrap();
        let r = verify_l1_invariance(&ps, &xi, 2000).unwrap();
        assert!(r.residual_rel <= r.residual_bound, "{r:?}");
        let one = sample(&s, Sampler::Uniform, 1, 6).unwrap();
        let r1 = verify_l1_invariance(&one, &xi, 50).unwrap();
        assert_eq!(r1.sym_diff_series, 0.0);
    }

    #[test]
    fn wrong_kernel_rejected() {
        let s: SpaceDescriptor = "S2".parse().unwrap();
        let ps = sample(&s, Sampler::Uniform, 4, 6).unwrap();
        let k = KernelExpansion::build(&s, &RadialMeasure::atom(1.0, 1.0).unwrap(), 10).unwrap();
        assert!(verify_l2_invariance_with(&ps, &k, None).is_err());
    }
}
