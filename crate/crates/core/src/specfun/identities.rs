//! The Jacobi square-integral identity and the polynomial `W_l(α, β)` behind
//! it, in both its alternating-sum and factored forms.
//!
//! The factored forms as commonly printed omit a `(1/2)_l` factor; the
//! `*_printed` variants reproduce those forms so the discrepancy can be
//! demonstrated numerically.

use super::gamma::{gamma_ratio, ln_beta, log_gamma};
use super::jacobi::JacobiTable;
use super::pochhammer::{falling, rising};
use super::quadrature::gauss_jacobi;
use super::scalar::Scalar;
use crate::error::{domain, Error, Result};

/// How [`jacobi_square_integral`] is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareIntegralMethod {
    /// Gauss–Jacobi quadrature against `(1-t)^{2α}(1+t)^{2β}`.
    Quadrature,
    /// Closed form `2^{2α+2β+1} (1/2)_l / (l!)^2 · B(2α+1, 2β+1) · T_l(α, β)`.
    Closed,
}

/// Alternating sum
/// `Σ_{k=0}^{2l} (-1)^{l+k}/k! <2l>_k <α+l>_k <β+l>_{2l-k} (2α+1)_{2l-k} (2β+1)_k`.
pub fn w_sum<S: Scalar>(alpha: &S, beta: &S, l: u32) -> S {
    let lf = S::from_int(l as i64);
    let two = S::from_int(2);
    let a_shift = alpha.clone() + lf.clone();
    let b_shift = beta.clone() + lf;
    let two_a1 = two.clone() * alpha.clone() + S::one();
    let two_b1 = two * beta.clone() + S::one();
    let two_l = S::from_int(2 * l as i64);
    let mut acc = S::zero();
    let mut k_fact = S::one();
    for k in 0..=2 * l {
        if k > 0 {
            k_fact = k_fact * S::from_int(k as i64);
        }
        let term = falling(&two_l, k)
            * falling(&a_shift, k)
            * falling(&b_shift, 2 * l - k)
            * rising(&two_a1, 2 * l - k)
            * rising(&two_b1, k)
            / k_fact.clone();
        if (l + k).is_multiple_of(2) {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// `4^l (1/2)_l (α+1)_l (β+1)_l (α+β+1)_l`, the factored form of [`w_sum`].
pub fn w_closed<S: Scalar>(alpha: &S, beta: &S, l: u32) -> S {
    rising(&S::from_ratio(1, 2), l) * w_closed_printed(alpha, beta, l)
}

/// `4^l (α+1)_l (β+1)_l (α+β+1)_l`: the factored form without `(1/2)_l`.
/// Kept as a negative control; it disagrees with [`w_sum`] for `l ≥ 1`.
pub fn w_closed_printed<S: Scalar>(alpha: &S, beta: &S, l: u32) -> S {
    let mut pow4 = S::one();
    for _ in 0..l {
        pow4 = pow4 * S::from_int(4);
    }
    pow4 * rising(&(alpha.clone() + S::one()), l)
        * rising(&(beta.clone() + S::one()), l)
        * rising(&(alpha.clone() + beta.clone() + S::one()), l)
}

/// `T_l(α, β) = (α+1)_l (β+1)_l / (α+β+3/2)_l`.
pub fn t_ratio<S: Scalar>(alpha: &S, beta: &S, l: u32) -> Result<S> {
    let den = rising(&(alpha.clone() + beta.clone() + S::from_ratio(3, 2)), l);
    if den.is_zero() {
        return Err(Error::Pole {
            func: "t_ratio",
            detail: format!("(α+β+3/2)_{l} vanishes"),
        });
    }
    Ok(rising(&(alpha.clone() + S::one()), l) * rising(&(beta.clone() + S::one()), l) / den)
}

fn check_square_params(alpha: f64, beta: f64) -> Result<()> {
    if alpha > -0.5 && beta > -0.5 {
        Ok(())
    } else {
        Err(domain(
            "jacobi_square_integral",
            format!("(α, β) = ({alpha}, {beta}) must exceed -1/2"),
        ))
    }
}

fn ln_t_ratio(alpha: f64, beta: f64, l: f64) -> Result<f64> {
    Ok(log_gamma(alpha + l + 1.0)? + log_gamma(beta + l + 1.0)? + log_gamma(alpha + beta + 1.5)?
        - log_gamma(alpha + 1.0)?
        - log_gamma(beta + 1.0)?
        - log_gamma(alpha + beta + 1.5 + l)?)
}

/// `∫_{-1}^{1} (P_l^{(α,β)}(t))^2 (1-t)^{2α} (1+t)^{2β} dt` for `α, β > -1/2`.
pub fn jacobi_square_integral(
    alpha: f64,
    beta: f64,
    l: usize,
    method: SquareIntegralMethod,
) -> Result<f64> {
    check_square_params(alpha, beta)?;
    match method {
        SquareIntegralMethod::Quadrature => {
            let rule = gauss_jacobi(2.0 * alpha, 2.0 * beta, l + 2)?;
            let table = JacobiTable::new(alpha, beta, l)?;
            Ok(rule.integrate(|t| table.eval(l, t).powi(2)))
        }
        SquareIntegralMethod::Closed => {
            let lf = l as f64;
            let ln_half_rising = log_gamma(lf + 0.5)? - log_gamma(0.5)?;
            let ln = (2.0 * alpha + 2.0 * beta + 1.0) * std::f64::consts::LN_2 + ln_half_rising
                - 2.0 * log_gamma(lf + 1.0)?
                + ln_beta(2.0 * alpha + 1.0, 2.0 * beta + 1.0)?
                + ln_t_ratio(alpha, beta, lf)?;
            Ok(ln.exp())
        }
    }
}

/// The closed form with `(1/2)_{l-1}` in place of `(1/2)_l`, i.e. the indexing
/// obtained by shifting the degree without shifting the Pochhammer symbol.
pub fn jacobi_square_integral_printed(alpha: f64, beta: f64, l: usize) -> Result<f64> {
    check_square_params(alpha, beta)?;
    let lf = l as f64;
    let half_shift = gamma_ratio(&[lf - 0.5], &[0.5])?;
    let rest = (2.0 * alpha + 2.0 * beta + 1.0) * std::f64::consts::LN_2
        - 2.0 * log_gamma(lf + 1.0)?
        + ln_beta(2.0 * alpha + 1.0, 2.0 * beta + 1.0)?
        + ln_t_ratio(alpha, beta, lf)?;
    Ok(half_shift * rest.exp())
}
