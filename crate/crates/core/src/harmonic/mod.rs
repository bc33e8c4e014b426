//! Spherical functions, dimensions of the irreducible components, and the
//! expansion coefficients of the chordal metric, the symmetric-difference
//! metrics and the discrepancy kernel.
//!
//! With `α = d/2 - 1`, `β = d0/2 - 1`:
//!
//! * `φ_l(t) = P_l^{(α,β)}(t) / P_l^{(α,β)}(1)`
//! * `τ = ½ Σ_{l≥1} M_l C_l (1 - φ_l(cos θ))`
//! * `λ(ξ, x, y) = Σ_{l≥1} b_l φ_l(cos θ)`, `b_l = κ l^{-2} M_l A_l(ξ)`

mod coeffs;
mod expansion;
mod spherical;

pub use coeffs::{coeff_a, coeff_a_closed, coeff_a_quadrature, coeff_c, coeff_m, kernel_weight};
pub use expansion::{
    chordal_series, coefficient_table, lambda_series_kernel, sym_diff_series, ChordalExpansion,
    CoefficientRow, KernelExpansion,
};
pub use spherical::{dim_m, dim_m_float, dim_m_table, phi_l};

/// Gauss–Legendre node budget for `A_l` of a density measure at degree `l`.
pub fn a_quadrature_nodes(l: usize) -> usize {
    4 * l + 64
}
