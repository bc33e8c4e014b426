use invlab::checks::{watson_cases, watson_violations};
use invlab::specfun::{
    beta_fn, f32_terminating, gauss_jacobi, gauss_legendre, jacobi_eval, jacobi_norm_m, log_gamma,
    rational, w_closed, w_closed_printed, w_sum, watson_closed, JacobiTable, Rational,
};
use proptest::prelude::*;

/// Generalized binomial `C(x, k)`.
fn binom(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (x - j as f64) / (j + 1) as f64)
}

/// Explicit sum `Σ_s C(n+α, n-s) C(n+β, s) ((t-1)/2)^s ((t+1)/2)^{n-s}`.
fn jacobi_explicit(alpha: f64, beta: f64, n: usize, t: f64) -> f64 {
    (0..=n)
        .map(|s| {
            binom(n as f64 + alpha, n - s)
                * binom(n as f64 + beta, s)
                * ((t - 1.0) / 2.0).powi(s as i32)
                * ((t + 1.0) / 2.0).powi((n - s) as i32)
        })
        .sum()
}

#[test]
fn recurrence_matches_explicit_sum() {
    for &(a, b) in &[(0.0, 0.0), (0.5, -0.5), (1.0, 3.0), (-0.5, 0.5), (2.5, 1.5), (7.0, 3.0)] {
        for n in 0..=14 {
            for k in 0..=20 {
                let t = -1.0 + k as f64 / 10.0;
                let direct = jacobi_explicit(a, b, n, t);
                let rec = jacobi_eval(a, b, n, t).unwrap();
                let scale = jacobi_explicit(a, b, n, 1.0).abs().max(jacobi_explicit(a, b, n, -1.0).abs());
                assert!(
                    (rec - direct).abs() <= 1e-12 * scale,
                    "α={a} β={b} n={n} t={t}: {rec} vs {direct}"
                );
            }
        }
    }
}

#[test]
fn legendre_and_chebyshev_special_cases() {
    let t: f64 = 0.3;
    assert!((jacobi_eval(0.0, 0.0, 2, t).unwrap() - (3.0 * t * t - 1.0) / 2.0).abs() < 1e-15);
    // P_n^{(-1/2,-1/2)}(cos x) = (1/2)_n / n! · cos(n x)
    let x: f64 = 0.7;
    for n in 0..8 {
        let c = (0..n).fold(1.0, |acc, j| acc * (0.5 + j as f64) / (j + 1) as f64);
        let p = jacobi_eval(-0.5, -0.5, n, x.cos()).unwrap();
        assert!((p - c * (n as f64 * x).cos()).abs() < 1e-14, "n={n}");
    }
}

#[test]
fn orthogonality_and_norms() {
    for &(a, b) in &[(0.0, 0.0), (0.5, 1.5), (3.0, 1.0), (7.0, 3.0)] {
        let rule = gauss_jacobi(a, b, 30).unwrap();
        let table = JacobiTable::new(a, b, 12).unwrap();
        for m in 0..=12 {
            for n in 0..=m {
                let v = rule.integrate(|t| table.eval(m, t) * table.eval(n, t));
                let h = rule.integrate(|t| table.eval(n, t).powi(2));
                if m == n {
                    // M_n is 2^{α+β+1} divided by the squared norm
                    let expected = 2f64.powf(a + b + 1.0) / jacobi_norm_m(a, b, n).unwrap();
                    assert!((h / expected - 1.0).abs() < 1e-12, "α={a} β={b} n={n}");
                } else {
                    assert!(v.abs() < 1e-12 * h.max(1.0), "α={a} β={b} ({m},{n}): {v}");
                }
            }
        }
    }
}

#[test]
fn euler_integral() {
    let rule = gauss_legendre(200).unwrap();
    // t = sin^2 φ: B(a, b) = 2 ∫ sin^{2a-1} φ cos^{2b-1} φ dφ over [0, π/2]
    for &(a, b) in &[(1.0, 1.0), (2.0, 3.0), (1.5, 2.5), (4.0, 1.25), (0.5, 0.5)] {
        let q = 2.0
            * rule.integrate_interval(0.0, std::f64::consts::FRAC_PI_2, |p: f64| {
                p.sin().powf(2.0 * a - 1.0) * p.cos().powf(2.0 * b - 1.0)
            });
        assert!((q / beta_fn(a, b).unwrap() - 1.0).abs() < 1e-10, "({a},{b})");
    }
    assert!((beta_fn(3.0, 3.0).unwrap() - 1.0 / 30.0).abs() < 1e-16);
}

#[test]
fn exact_w_identity() {
    let grid: Vec<Rational> = [(0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (5, 2), (3, 1)]
        .iter()
        .map(|&(p, q)| rational(p, q))
        .collect();
    for a in &grid {
        for b in &grid {
            for l in 0..=10 {
                assert_eq!(w_sum(a, b, l), w_closed(a, b, l), "α={a} β={b} l={l}");
                if l >= 1 {
                    assert_ne!(w_sum(a, b, l), w_closed_printed(a, b, l));
                }
            }
        }
    }
}

#[test]
fn watson_random_cases() {
    let cases = watson_cases(200, 2024, 6, 1e-11).unwrap();
    assert_eq!(cases.len(), 200);
    for c in &cases {
        assert!(c.pass, "{c:?}");
    }
    assert!(watson_violations(50, 2024).iter().all(|v| v.rejected));
}

#[test]
fn watson_against_known_value() {
    // 3F2(-2, 2, 1; 1/2, 2; 1) = 1 - 4 + 8/3
    let (a, b, c) = (-2.0, 2.0, 1.0);
    let brute = f32_terminating(-2, &b, &c, &((a + b + 1.0) / 2.0), &(2.0 * c)).unwrap();
    let expected = -1.0 / 3.0;
    assert!((brute - expected).abs() < 1e-15);
    assert!((watson_closed(a, b, c).unwrap() - expected).abs() < 1e-14);
}

proptest! {
    #[test]
    fn gamma_recurrence(x in 0.05f64..60.0) {
        let lhs = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
        prop_assert!((lhs - x.ln()).abs() < 1e-13 * (1.0 + log_gamma(x + 1.0).unwrap().abs()));
    }

    #[test]
    fn beta_is_symmetric(a in 0.1f64..30.0, b in 0.1f64..30.0) {
        let (x, y) = (beta_fn(a, b).unwrap(), beta_fn(b, a).unwrap());
        prop_assert!((x - y).abs() <= 1e-14 * x);
    }

    #[test]
    fn jacobi_reflection(a in -0.9f64..6.0, b in -0.9f64..6.0, n in 0usize..15, t in -1.0f64..1.0) {
        // P_n^{(α,β)}(-t) = (-1)^n P_n^{(β,α)}(t)
        let lhs = jacobi_eval(a, b, n, -t).unwrap();
        let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * jacobi_eval(b, a, n, t).unwrap();
        let scale = jacobi_eval(a, b, n, 1.0).unwrap().abs().max(jacobi_eval(b, a, n, 1.0).unwrap().abs());
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn quadrature_weights_sum_to_mass(a in -0.9f64..10.0, b in -0.9f64..10.0, n in 1usize..40) {
        let rule = gauss_jacobi(a, b, n).unwrap();
        let mass = 2f64.powf(a + b + 1.0) * beta_fn(a + 1.0, b + 1.0).unwrap();
        prop_assert!((rule.weights.iter().sum::<f64>() / mass - 1.0).abs() < 1e-12);
    }
}
