use serde::{Deserialize, Serialize};

use super::gamma::ln_beta;
use crate::error::{domain, Error, Result};

/// Gauss–Jacobi rule for the weight `(1-t)^α (1+t)^β` on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub alpha: f64,
    pub beta: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `Σ w_i f(t_i) ≈ ∫ f(t) (1-t)^α (1+t)^β dt`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(t))
            .sum()
    }

    /// Affine transport of a Legendre rule to `[a, b]`: `≈ ∫_a^b f(x) dx`.
    ///
    /// Panics if the rule is not a Legendre rule (`α = β = 0`).
    pub fn integrate_interval<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        assert!(self.alpha == 0.0 && self.beta == 0.0, "not a Legendre rule");
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        half * self.integrate(|t| f(mid + half * t))
    }
}

/// Gauss–Jacobi nodes and weights via the symmetric tridiagonal (Golub–Welsch)
/// eigenvalue problem.
pub fn gauss_jacobi(alpha: f64, beta: f64, order: usize) -> Result<QuadratureRule> {
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(domain(
            "gauss_jacobi",
            format!("parameters (α, β) = ({alpha}, {beta}) must exceed -1"),
        ));
    }
    if order == 0 {
        return Err(domain("gauss_jacobi", "order must be at least 1"));
    }
    let ab = alpha + beta;
    let mut diag = Vec::with_capacity(order);
    diag.push((beta - alpha) / (ab + 2.0));
    for n in 1..order {
        let s = 2.0 * n as f64 + ab;
        diag.push((beta * beta - alpha * alpha) / (s * (s + 2.0)));
    }
    let mut off = Vec::with_capacity(order);
    for n in 1..order {
        let nf = n as f64;
        let s = 2.0 * nf + ab;
        let b2 = if n == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            4.0 * nf * (nf + alpha) * (nf + beta) * (nf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        off.push(b2.sqrt());
    }
    off.push(0.0);

    let mut first = vec![0.0; order];
    first[0] = 1.0;
    tridiagonal_ql(&mut diag, &mut off, &mut first)?;

    let ln_mu0 = (ab + 1.0) * std::f64::consts::LN_2 + ln_beta(alpha + 1.0, beta + 1.0)?;
    let mu0 = ln_mu0.exp();
    let mut pairs: Vec<(f64, f64)> = diag
        .into_iter()
        .zip(first)
        .map(|(t, z)| (t, mu0 * z * z))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule {
        alpha,
        beta,
        nodes,
        weights,
    })
}

/// Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule> {
    gauss_jacobi(0.0, 0.0, order)
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
///
/// On return `d` holds the eigenvalues and `z[j]` the first component of the
/// `j`-th normalized eigenvector. `e[i]` couples rows `i` and `i+1`; the last
/// entry is scratch.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{beta_fn, rational, rising, Scalar};
    use approx::assert_relative_eq;

    /// `∫ t^k (1-t)^α (1+t)^β dt` for rational `α = an/ad`, `β = bn/bd`.
    ///
    /// Writing `t = (1+t) - 1`, each term is the zeroth moment times the exact
    /// ratio `2^j (β+1)_j / (α+β+2)_j`, so only `m_0` is rounded.
    fn moment(alpha: (i64, i64), beta: (i64, i64), k: u32) -> f64 {
        let a = rational(alpha.0, alpha.1);
        let b = rational(beta.0, beta.1);
        let one = rational(1, 1);
        let mut ratio = rational(0, 1);
        let mut binom = one.clone();
        for j in 0..=k {
            let sign = if (k - j).is_multiple_of(2) { one.clone() } else { -one.clone() };
            let pow2 = rational(1i64 << j, 1);
            let poch = rising(&(b.clone() + &one), j) / rising(&(a.clone() + &b + rational(2, 1)), j);
            ratio += sign * &binom * pow2 * poch;
            binom *= rational((k - j) as i64, (j + 1) as i64);
        }
        let (af, bf) = (alpha.0 as f64 / alpha.1 as f64, beta.0 as f64 / beta.1 as f64);
        let m0 = 2f64.powf(af + bf + 1.0) * beta_fn(af + 1.0, bf + 1.0).unwrap();
        m0 * ratio.to_f64()
    }

    #[test]
    fn midpoint_rule() {
        let rule = gauss_jacobi(0.0, 0.0, 1).unwrap();
        assert_eq!(rule.nodes.len(), 1);
        assert!(rule.nodes[0].abs() < 1e-15);
        assert_relative_eq!(rule.weights[0], 2.0, max_relative = 1e-15);
    }

    #[test]
    fn zeroth_moment_is_euler_integral() {
        for &(a, b) in &[(0.0, 0.0), (0.5, 2.0), (-0.5, -0.5), (7.0, 3.0), (16.0, 16.0)] {
            let rule = gauss_jacobi(a, b, 9).unwrap();
            let total: f64 = rule.weights.iter().sum();
            let expected = 2f64.powf(a + b + 1.0) * beta_fn(a + 1.0, b + 1.0).unwrap();
            assert_relative_eq!(total, expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn rule_invariants_and_exactness() {
        let params = [((0, 1), (0, 1)), ((1, 1), (1, 1)), ((1, 2), (-1, 2)), ((3, 1), (1, 1)), ((-7, 10), (5, 2))];
        for &(ar, br) in &params {
            let (a, b) = (ar.0 as f64 / ar.1 as f64, br.0 as f64 / br.1 as f64);
            let scale = moment(ar, br, 0);
            for order in 1..=12 {
                let rule = gauss_jacobi(a, b, order).unwrap();
                assert_eq!(rule.order(), order);
                assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
                assert!(rule.weights.iter().all(|&w| w > 0.0));
                assert!(rule.nodes.iter().all(|&t| t > -1.0 && t < 1.0));
                for k in 0..2 * order as u32 {
                    let exact = moment(ar, br, k);
                    let approx = rule.integrate(|t| t.powi(k as i32));
                    assert!(
                        (approx - exact).abs() <= 1e-12 * exact.abs() + 1e-14 * scale,
                        "α={a} β={b} n={order} k={k}: {approx} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn orthogonality_oracle_for_order_twenty() {
        // ∫ (P_1^{(1,1)})^2 (1-t)(1+t) dt = 2^{α+β+1} / M_1 = 8 · 2/15
        let rule = gauss_jacobi(1.0, 1.0, 20).unwrap();
        let v = rule.integrate(|t| (2.0 * t).powi(2));
        assert_relative_eq!(v, 16.0 / 15.0, max_relative = 1e-13);
    }

    #[test]
    fn large_legendre_rule_integrates_smooth_functions() {
        let rule = gauss_legendre(2000).unwrap();
        let v = rule.integrate_interval(0.0, std::f64::consts::PI, f64::sin);
        assert_relative_eq!(v, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gauss_jacobi(-1.0, 0.0, 3).is_err());
        assert!(gauss_jacobi(0.0, 0.0, 0).is_err());
    }

    #[test]
    fn rule_serializes_to_json() {
        let rule = gauss_jacobi(0.5, 1.5, 4).unwrap();
        let json = serde_json::to_string(&rule).unwrap();
        let back: QuadratureRule = serde_json::from_str(&json).unwrap();
        assert_eq!(rule, back);
    }
}
