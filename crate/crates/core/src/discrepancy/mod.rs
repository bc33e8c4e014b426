//! Distance sums, the quadratic ball discrepancy by series and by Monte
//! Carlo, and the L1/L2 invariance identities
//!
//! * `λ[ξ, D] + θ^Δ[ξ, D] = ⟨θ^Δ(ξ)⟩ N^2`
//! * `γ λ[ξ♮, D] + τ[D] = ⟨τ⟩ N^2`
//!
//! All sums run over ordered pairs, diagonal included.

mod montecarlo;
mod report;
mod sums;

pub use montecarlo::{lambda_monte_carlo, MonteCarloEstimate};
pub use report::{
    verify_l1_invariance, verify_l2_invariance, verify_l2_invariance_with, InvarianceReport,
    L1Report,
};
pub use sums::{kernel_sum, lambda_series, sym_diff_sum, tau_sum};
