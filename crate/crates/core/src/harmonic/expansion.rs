use num_bigint::BigUint;

use super::a_quadrature_nodes;
use super::coeffs::{a_table, accumulate_a, coeff_a_closed, coeff_m, kernel_weight, ln_coeff_c};
use super::spherical::dim_m_table;
use crate::error::{domain, Error, Result};
use crate::numeric::compensated_sum;
use crate::spaces::{RadialMeasure, SpaceDescriptor};
use crate::specfun::{ln_jacobi_at_one, JacobiTable};

fn check_t(func: &'static str, t: f64) -> Result<()> {
    if t.abs() <= 1.0 {
        Ok(())
    } else {
        Err(domain(func, format!("t = {t} outside [-1, 1]")))
    }
}

fn check_truncation(l: usize) -> Result<()> {
    if l == 0 {
        Err(Error::InvalidConfig("truncation degree must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `2 max_{L/2 < l ≤ L} (l^2 w_l) / L` for weights `w[l-1] = w_l ~ c l^{-2}`.
fn tail_estimate(w: &[f64]) -> f64 {
    let big_l = w.len();
    let c = (big_l / 2 + 1..=big_l)
        .map(|l| (l * l) as f64 * w[l - 1])
        .fold(0.0, f64::max);
    2.0 * c / big_l as f64
}

/// Divides `w_l` by `P_l(1)` so that `Σ w_l φ_l(t)` becomes a plain Jacobi sum.
fn jacobi_weights(space: &SpaceDescriptor, w: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(0.0);
    for (i, &x) in w.iter().enumerate() {
        out.push(x * (-ln_jacobi_at_one(space.alpha(), i + 1)?).exp());
    }
    Ok(out)
}

/// Truncated expansion of the discrepancy kernel
/// `λ(ξ, x, y) = Σ_{l=1}^{L} b_l φ_l(cos θ(x, y))`.
#[derive(Debug, Clone)]
pub struct KernelExpansion {
    space: SpaceDescriptor,
    xi: RadialMeasure,
    b: Vec<f64>,
    tail_bound: f64,
    jacobi: Vec<f64>,
    table: JacobiTable,
}

impl KernelExpansion {
    pub fn build(space: &SpaceDescriptor, xi: &RadialMeasure, truncation: usize) -> Result<Self> {
        check_truncation(truncation)?;
        xi.validate()?;
        let a: Vec<f64> = match xi {
            RadialMeasure::SinDensity => (1..=truncation)
                .map(|l| coeff_a_closed(space, l))
                .collect::<Result<_>>()?,
            _ => {
                let table = a_table(space, truncation)?;
                let mut scratch = vec![0.0; truncation];
                let mut acc = vec![0.0; truncation];
                for (r, w) in xi.discretize(a_quadrature_nodes(truncation))? {
                    accumulate_a(space, &table, r, w, &mut scratch, &mut acc);
                }
                acc
            }
        };
        let b = a
            .iter()
            .enumerate()
            .map(|(i, &a_l)| kernel_weight(space, i + 1, a_l))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            space: *space,
            xi: xi.clone(),
            tail_bound: tail_estimate(&b),
            jacobi: jacobi_weights(space, &b)?,
            table: JacobiTable::new(space.alpha(), space.beta(), truncation)?,
            b,
        })
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn xi(&self) -> &RadialMeasure {
        &self.xi
    }

    pub fn truncation(&self) -> usize {
        self.b.len()
    }

    /// `b_1, ..., b_L`.
    pub fn weights(&self) -> &[f64] {
        &self.b
    }

    /// Estimated bound on `Σ_{l>L} b_l`, which bounds `|λ - λ_L|` pointwise.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// `Σ_{l=1}^{L} b_l`, the truncated diagonal kernel value.
    pub fn weight_sum(&self) -> f64 {
        compensated_sum(self.b.iter().copied())
    }

    /// `Σ b_l φ_l(t)`; `t` must lie in `[-1, 1]`.
    pub fn kernel(&self, t: f64) -> f64 {
        self.table.weighted_sum(t, &self.jacobi)
    }

    /// `Σ b_l (1 - φ_l(t))`.
    pub fn sym_diff(&self, t: f64) -> f64 {
        self.weight_sum() - self.kernel(t)
    }
}

/// Truncated chordal expansion `τ = ½ Σ_{l=1}^{L} M_l C_l (1 - φ_l(cos θ))`.
#[derive(Debug, Clone)]
pub struct ChordalExpansion {
    space: SpaceDescriptor,
    w: Vec<f64>,
    weight_sum: f64,
    tail_bound: f64,
    jacobi: Vec<f64>,
    table: JacobiTable,
}

impl ChordalExpansion {
    pub fn build(space: &SpaceDescriptor, truncation: usize) -> Result<Self> {
        check_truncation(truncation)?;
        let w = (1..=truncation)
            .map(|l| Ok((coeff_m(space, l)?.ln() + ln_coeff_c(space, l)?).exp() / 2.0))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            space: *space,
            weight_sum: compensated_sum(w.iter().copied()),
            tail_bound: 2.0 * tail_estimate(&w),
            jacobi: jacobi_weights(space, &w)?,
            table: JacobiTable::new(space.alpha(), space.beta(), truncation)?,
            w,
        })
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    /// `M_l C_l / 2` for `l = 1..=L`.
    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    /// `Σ_{l=1}^{L} M_l C_l / 2`, which tends to `⟨τ⟩`.
    pub fn weight_sum(&self) -> f64 {
        self.weight_sum
    }

    /// Bound on `|τ - τ_L|` at any `t` (the weight tail estimate times
    /// `max |1 - φ_l| = 2`).
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn chord(&self, t: f64) -> f64 {
        self.weight_sum - self.table.weighted_sum(t, &self.jacobi)
    }
}

/// `½ Σ_{l=1}^{L} M_l C_l (1 - φ_l(t))`.
pub fn chordal_series(space: &SpaceDescriptor, t: f64, truncation: usize) -> Result<f64> {
    check_t("chordal_series", t)?;
    Ok(ChordalExpansion::build(space, truncation)?.chord(t))
}

/// `Σ_{l=1}^{L} b_l (1 - φ_l(t))`.
pub fn sym_diff_series(
    space: &SpaceDescriptor,
    xi: &RadialMeasure,
    t: f64,
    truncation: usize,
) -> Result<f64> {
    check_t("sym_diff_series", t)?;
    Ok(KernelExpansion::build(space, xi, truncation)?.sym_diff(t))
}

/// `Σ_{l=1}^{L} b_l φ_l(t)`.
pub fn lambda_series_kernel(expansion: &KernelExpansion, t: f64) -> Result<f64> {
    check_t("lambda_series_kernel", t)?;
    Ok(expansion.kernel(t))
}

/// One row of the coefficient dump; degree-0 rows carry only `m_0` and `M_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientRow {
    pub l: usize,
    pub m: BigUint,
    pub big_m: f64,
    pub c: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
}

/// Rows `l = 0..=lmax` of `(l, m_l, M_l, C_l, A_l(ξ), b_l)`.
pub fn coefficient_table(
    space: &SpaceDescriptor,
    xi: &RadialMeasure,
    lmax: usize,
) -> Result<Vec<CoefficientRow>> {
    let dims = dim_m_table(space, lmax)?;
    let kernel = if lmax > 0 {
        Some(KernelExpansion::build(space, xi, lmax)?)
    } else {
        None
    };
    dims.into_iter()
        .enumerate()
        .map(|(l, m)| {
            let big_m = coeff_m(space, l)?;
            if l == 0 {
                return Ok(CoefficientRow { l, m, big_m, c: None, a: None, b: None });
            }
            let b = kernel.as_ref().expect("lmax > 0").weights()[l - 1];
            let lf = l as f64;
            Ok(CoefficientRow {
                l,
                m,
                big_m,
                c: Some(ln_coeff_c(space, l)?.exp()),
                a: Some(b * lf * lf / (space.kappa() * big_m)),
                b: Some(b),
            })
        })
        .collect()
}
