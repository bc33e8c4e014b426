use super::a_quadrature_nodes;
use super::spherical::require_positive_degree;
use crate::error::Result;
use crate::spaces::{RadialMeasure, SpaceDescriptor};
use crate::specfun::{jacobi_norm_m, ln_beta, ln_jacobi_at_one, log_gamma, JacobiTable};

/// `M_l(α, β)` at the space's Jacobi parameters.
pub fn coeff_m(space: &SpaceDescriptor, l: usize) -> Result<f64> {
    jacobi_norm_m(space.alpha(), space.beta(), l)
}

pub(crate) fn ln_coeff_c(space: &SpaceDescriptor, l: usize) -> Result<f64> {
    require_positive_degree("coeff_c", l)?;
    let lf = l as f64;
    let (d, d0) = (space.d() as f64, space.d0() as f64);
    Ok(ln_beta((d + 1.0) / 2.0, lf + d0 / 2.0)? + log_gamma(lf - 0.5)? - log_gamma(0.5)?
        + ln_jacobi_at_one(space.alpha(), l)?
        - log_gamma(lf + 1.0)?)
}

/// Chordal coefficient
/// `C_l = B((d+1)/2, l + d0/2) (1/2)_{l-1} P_l^{(α,β)}(1) / Γ(l+1)`.
pub fn coeff_c(space: &SpaceDescriptor, l: usize) -> Result<f64> {
    ln_coeff_c(space, l).map(f64::exp)
}

/// `A_l(ξ♮) = 2 (1/2)_{l-1} / ((l-1)!)^2 · B(d+1, d0+1) · T_{l-1}(d/2, d0/2)`
/// with `T_k(a, b) = (a+1)_k (b+1)_k / (a+b+3/2)_k`.
pub fn coeff_a_closed(space: &SpaceDescriptor, l: usize) -> Result<f64> {
    require_positive_degree("coeff_a", l)?;
    let k = (l - 1) as f64;
    let (a, b) = (space.d() as f64 / 2.0, space.d0() as f64 / 2.0);
    let ln_t = log_gamma(a + k + 1.0)? - log_gamma(a + 1.0)? + log_gamma(b + k + 1.0)?
        - log_gamma(b + 1.0)?
        + log_gamma(a + b + 1.5)?
        - log_gamma(a + b + 1.5 + k)?;
    let ln = std::f64::consts::LN_2 + log_gamma(k + 0.5)? - log_gamma(0.5)? - 2.0 * log_gamma(k + 1.0)?
        + ln_beta(2.0 * a + 1.0, 2.0 * b + 1.0)?
        + ln_t;
    Ok(ln.exp())
}

/// Accumulates `w · (P_k^{(d/2,d0/2)}(cos r))^2 (sin r/2)^{2d} (cos r/2)^{2d0}`
/// into `acc[k]` for every `k < acc.len()`.
pub(crate) fn accumulate_a(
    space: &SpaceDescriptor,
    table: &JacobiTable,
    r: f64,
    w: f64,
    scratch: &mut [f64],
    acc: &mut [f64],
) {
    let s = (0.5 * r).sin();
    let c = (0.5 * r).cos();
    let factor = w * s.powi(2 * space.d() as i32) * c.powi(2 * space.d0() as i32);
    if factor == 0.0 {
        return;
    }
    table.eval_all(r.cos(), scratch);
    for (a, p) in acc.iter_mut().zip(scratch.iter()) {
        *a += factor * p * p;
    }
}

pub(crate) fn a_table(space: &SpaceDescriptor, max_degree: usize) -> Result<JacobiTable> {
    JacobiTable::new(space.d() as f64 / 2.0, space.d0() as f64 / 2.0, max_degree)
}

/// `A_l(ξ)` by direct integration over the discretized measure.
pub fn coeff_a_quadrature(
    space: &SpaceDescriptor,
    xi: &RadialMeasure,
    l: usize,
    nodes: usize,
) -> Result<f64> {
    require_positive_degree("coeff_a", l)?;
    let table = a_table(space, l)?;
    let mut scratch = vec![0.0; l];
    let mut acc = vec![0.0; l];
    for (r, w) in xi.discretize(nodes)? {
        accumulate_a(space, &table, r, w, &mut scratch, &mut acc);
    }
    Ok(acc[l - 1])
}

/// `A_l(ξ) = ∫ (P_{l-1}^{(d/2,d0/2)}(cos r))^2 (sin r/2)^{2d} (cos r/2)^{2d0} dξ(r)`:
/// closed form for `ξ♮`, exact for atoms, Gauss–Legendre with `4l + 64`
/// nodes for tabulated densities.
pub fn coeff_a(space: &SpaceDescriptor, xi: &RadialMeasure, l: usize) -> Result<f64> {
    xi.validate()?;
    match xi {
        RadialMeasure::SinDensity => coeff_a_closed(space, l),
        _ => coeff_a_quadrature(space, xi, l, a_quadrature_nodes(l)),
    }
}

/// `b_l = κ l^{-2} M_l A_l`.
pub fn kernel_weight(space: &SpaceDescriptor, l: usize, a_l: f64) -> Result<f64> {
    require_positive_degree("kernel_weight", l)?;
    let lf = l as f64;
    Ok(space.kappa() / (lf * lf) * coeff_m(space, l)? * a_l)
}
