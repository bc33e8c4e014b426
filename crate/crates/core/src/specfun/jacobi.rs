use super::gamma::{beta_fn, log_gamma};
use crate::error::{domain, Result};

fn check_params(func: &'static str, alpha: f64, beta: f64) -> Result<()> {
    if alpha > -1.0 && beta > -1.0 {
        Ok(())
    } else {
        Err(domain(func, format!("parameters (α, β) = ({alpha}, {beta}) must exceed -1")))
    }
}

/// Three-term recurrence coefficients for `P_n^{(α,β)}`, precomputed up to a
/// maximum degree so that repeated evaluation costs `O(L)` per point.
///
/// `P_n(t) = (a_n t + b_n) P_{n-1}(t) - c_n P_{n-2}(t)` for `n ≥ 2`.
#[derive(Debug, Clone)]
pub struct JacobiTable {
    alpha: f64,
    beta: f64,
    coeffs: Vec<[f64; 3]>,
}

impl JacobiTable {
    pub fn new(alpha: f64, beta: f64, max_degree: usize) -> Result<Self> {
        check_params("jacobi_eval", alpha, beta)?;
        let ab = alpha + beta;
        let coeffs = (2..=max_degree.max(1))
            .map(|n| {
                let n = n as f64;
                let s = 2.0 * n + ab;
                let denom = 2.0 * n * (n + ab) * (s - 2.0);
                [
                    (s - 1.0) * s * (s - 2.0) / denom,
                    (s - 1.0) * (alpha * alpha - beta * beta) / denom,
                    2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * s / denom,
                ]
            })
            .collect();
        Ok(Self {
            alpha,
            beta,
            coeffs,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() + 1
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    fn p1(&self, t: f64) -> f64 {
        ((self.alpha + self.beta + 2.0) * t + self.alpha - self.beta) / 2.0
    }

    /// `P_l(t)`; `l` must not exceed [`max_degree`](Self::max_degree).
    pub fn eval(&self, l: usize, t: f64) -> f64 {
        assert!(l <= self.max_degree(), "degree {l} beyond table");
        if l == 0 {
            return 1.0;
        }
        let (mut prev, mut cur) = (1.0, self.p1(t));
        for [a, b, c] in &self.coeffs[..l - 1] {
            let next = (a * t + b) * cur - c * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Fills `out[l] = P_l(t)` for `l = 0..out.len()`.
    pub fn eval_all(&self, t: f64, out: &mut [f64]) {
        assert!(out.len() <= self.max_degree() + 1, "degree beyond table");
        if out.is_empty() {
            return;
        }
        out[0] = 1.0;
        if out.len() == 1 {
            return;
        }
        out[1] = self.p1(t);
        for l in 2..out.len() {
            let [a, b, c] = self.coeffs[l - 2];
            out[l] = (a * t + b) * out[l - 1] - c * out[l - 2];
        }
    }

    /// `Σ_l weights[l] · P_l(t)`, running the recurrence once.
    pub fn weighted_sum(&self, t: f64, weights: &[f64]) -> f64 {
        assert!(weights.len() <= self.max_degree() + 1, "degree beyond table");
        let Some((&w0, rest)) = weights.split_first() else {
            return 0.0;
        };
        let mut acc = w0;
        let (mut prev, mut cur) = (1.0, self.p1(t));
        for (i, &w) in rest.iter().enumerate() {
            if i > 0 {
                let [a, b, c] = self.coeffs[i - 1];
                let next = (a * t + b) * cur - c * prev;
                prev = cur;
                cur = next;
            }
            acc += w * cur;
        }
        acc
    }
}

/// Jacobi polynomial `P_l^{(α,β)}(t)` in the standard normalization
/// `P_l(1) = binom(α + l, l)`.
pub fn jacobi_eval(alpha: f64, beta: f64, l: usize, t: f64) -> Result<f64> {
    check_params("jacobi_eval", alpha, beta)?;
    if !(t.abs() <= 1.0) {
        return Err(domain("jacobi_eval", format!("t = {t} outside [-1, 1]")));
    }
    Ok(JacobiTable::new(alpha, beta, l)?.eval(l, t))
}

/// `ln P_l^{(α,β)}(1) = ln Γ(α+l+1) - ln Γ(l+1) - ln Γ(α+1)`.
pub fn ln_jacobi_at_one(alpha: f64, l: usize) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(domain("jacobi_at_one", format!("α = {alpha} must exceed -1")));
    }
    let l = l as f64;
    Ok(log_gamma(alpha + l + 1.0)? - log_gamma(l + 1.0)? - log_gamma(alpha + 1.0)?)
}

/// `P_l^{(α,β)}(1)`.
pub fn jacobi_at_one(alpha: f64, l: usize) -> Result<f64> {
    ln_jacobi_at_one(alpha, l).map(f64::exp)
}

/// Inverse squared norm `M_l(α, β)` of `P_l^{(α,β)}` with respect to the
/// weight `2^{-α-β-1}(1-t)^α(1+t)^β` on `[-1, 1]`.
pub fn jacobi_norm_m(alpha: f64, beta: f64, l: usize) -> Result<f64> {
    check_params("jacobi_norm_m", alpha, beta)?;
    if l == 0 {
        return Ok(1.0 / beta_fn(alpha + 1.0, beta + 1.0)?);
    }
    let lf = l as f64;
    let ln_ratio = log_gamma(lf + 1.0)? + log_gamma(lf + alpha + beta + 1.0)?
        - log_gamma(lf + alpha + 1.0)?
        - log_gamma(lf + beta + 1.0)?;
    Ok((2.0 * lf + alpha + beta + 1.0) * ln_ratio.exp())
}
