//! Reproducible identity checks shared by the command-line tool and the test
//! suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{
    f32_terminating, jacobi_square_integral, jacobi_square_integral_printed, rational,
    watson_closed, watson_condition, Rational, Scalar, SquareIntegralMethod,
};

fn rel_err(value: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        value.abs()
    } else {
        ((value - reference) / reference).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiCheckRow {
    pub alpha: f64,
    pub beta: f64,
    pub l: usize,
    pub quadrature: f64,
    pub closed: f64,
    pub rel_err: f64,
    pub pass: bool,
}

/// Quadrature against closed form of the Jacobi square integral on the grid
/// `alphas × betas × 0..=lmax`.
pub fn jacobi_identity_rows(
    alphas: &[f64],
    betas: &[f64],
    lmax: usize,
    tolerance: f64,
) -> Result<Vec<JacobiCheckRow>> {
    let mut rows = Vec::with_capacity(alphas.len() * betas.len() * (lmax + 1));
    for &alpha in alphas {
        for &beta in betas {
            for l in 0..=lmax {
                let quadrature =
                    jacobi_square_integral(alpha, beta, l, SquareIntegralMethod::Quadrature)?;
                let closed = jacobi_square_integral(alpha, beta, l, SquareIntegralMethod::Closed)?;
                let err = rel_err(quadrature, closed);
                rows.push(JacobiCheckRow {
                    alpha,
                    beta,
                    l,
                    quadrature,
                    closed,
                    rel_err: err,
                    pass: err <= tolerance,
                });
            }
        }
    }
    Ok(rows)
}

/// The closed form with the `(1/2)_l` factor dropped, compared against
/// quadrature. `printed_fails` is the expected outcome.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErratumControl {
    pub alpha: f64,
    pub beta: f64,
    pub l: usize,
    pub quadrature: f64,
    pub corrected: f64,
    pub printed: f64,
    /// `printed / quadrature`.
    pub ratio: f64,
    pub printed_fails: bool,
}

pub fn erratum_control(alpha: f64, beta: f64, l: usize, tolerance: f64) -> Result<ErratumControl> {
    let quadrature = jacobi_square_integral(alpha, beta, l, SquareIntegralMethod::Quadrature)?;
    let corrected = jacobi_square_integral(alpha, beta, l, SquareIntegralMethod::Closed)?;
    let printed = jacobi_square_integral_printed(alpha, beta, l)?;
    Ok(ErratumControl {
        alpha,
        beta,
        l,
        quadrature,
        corrected,
        printed,
        ratio: printed / quadrature,
        printed_fails: rel_err(printed, quadrature) > tolerance,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WatsonCase {
    pub l: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub brute: f64,
    pub closed: f64,
    pub rel_err: f64,
    pub pass: bool,
}

/// Least distance from `x` to a non-positive integer.
fn pole_distance(x: f64) -> f64 {
    if x > 0.5 {
        return x;
    }
    (x - x.round()).abs()
}

fn exact(x: f64) -> Rational {
    Rational::from_float(x).expect("finite")
}

/// Random admissible Watson cases with `a = -2l`, `1 ≤ l ≤ lmax`.
///
/// `b` and `c` are drawn from `(0, 2·lmax + 6)` and `(0, 6)`; draws with a
/// non-positive convergence condition or a lower parameter within `0.1` of a
/// pole are redrawn. The terminating sum is evaluated exactly on the binary
/// values of `b` and `c`, so only the Γ-ratio carries rounding error.
pub fn watson_cases(count: usize, seed: u64, lmax: usize, tolerance: f64) -> Result<Vec<WatsonCase>> {
    if lmax == 0 {
        return Err(Error::InvalidConfig("lmax must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(count);
    while cases.len() < count {
        let l = rng.random_range(1..=lmax);
        let a = -2.0 * l as f64;
        let b: f64 = rng.random_range(0.05..(2 * lmax + 6) as f64);
        let c: f64 = rng.random_range(0.05..6.0);
        let d = (a + b + 1.0) / 2.0;
        if watson_condition(a, b, c) <= 0.0 || pole_distance(d) < 0.1 {
            continue;
        }
        let (bq, cq) = (exact(b), exact(c));
        let dq = (rational(-2 * l as i64 + 1, 1) + bq.clone()) / rational(2, 1);
        let eq = rational(2, 1) * cq.clone();
        let brute = f32_terminating(-2 * l as i64, &bq, &cq, &dq, &eq)?.to_f64();
        let closed = watson_closed(a, b, c)?;
        let err = rel_err(brute, closed);
        cases.push(WatsonCase {
            l,
            a,
            b,
            c,
            brute,
            closed,
            rel_err: err,
            pass: err <= tolerance,
        });
    }
    Ok(cases)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WatsonRejection {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub condition: f64,
    pub rejected: bool,
}

/// Cases with `2c - a - b + 1 ≤ 0`; each should be refused by the closed form.
pub fn watson_violations(count: usize, seed: u64) -> Vec<WatsonRejection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5741_5453_4f4e);
    (0..count)
        .map(|_| {
            let a: f64 = rng.random_range(-3.0..3.0);
            let c: f64 = rng.random_range(0.1..4.0);
            let excess: f64 = rng.random_range(0.01..5.0);
            let b = 2.0 * c - a + 1.0 + excess;
            let condition = watson_condition(a, b, c);
            WatsonRejection {
                a,
                b,
                c,
                condition,
                rejected: matches!(watson_closed(a, b, c), Err(Error::ConditionViolated(_))),
            }
        })
        .collect()
}
