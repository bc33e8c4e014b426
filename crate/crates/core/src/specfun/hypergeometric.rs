use super::gamma::gamma_ratio;
use super::scalar::Scalar;
use crate::error::{domain, Error, Result};

/// Terminating `3F2(a, b, c; d, e; 1)` with `a` a non-positive integer.
///
/// Summation stops early if a numerator factor vanishes. A vanishing
/// denominator factor before that point is an error.
pub fn f32_terminating<S: Scalar>(a: i64, b: &S, c: &S, d: &S, e: &S) -> Result<S> {
    if a > 0 {
        return Err(domain("f32_terminating", format!("a = {a} is not a non-positive integer")));
    }
    let terms = (-a) as usize;
    let mut term = S::one();
    let mut sum = S::one();
    for k in 0..terms {
        let kk = S::from_int(k as i64);
        let num = S::from_int(a + k as i64) * (b.clone() + kk.clone()) * (c.clone() + kk.clone());
        if num.is_zero() {
            break;
        }
        let den_d = d.clone() + kk.clone();
        let den_e = e.clone() + kk;
        if den_d.is_zero() || den_e.is_zero() {
            return Err(Error::Pole {
                func: "f32_terminating",
                detail: format!("denominator Pochhammer vanishes at k = {k}"),
            });
        }
        term = term * num / (den_d * den_e * S::from_int(k as i64 + 1));
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// `2c - a - b + 1`, which must be positive for Watson's evaluation to hold.
pub fn watson_condition(a: f64, b: f64, c: f64) -> f64 {
    2.0 * c - a - b + 1.0
}

/// Watson's closed form for `3F2(a, b, c; (a+b+1)/2, 2c; 1)`.
pub fn watson_closed(a: f64, b: f64, c: f64) -> Result<f64> {
    let cond = watson_condition(a, b, c);
    if !(cond > 0.0) {
        return Err(Error::ConditionViolated(cond));
    }
    gamma_ratio(
        &[0.5, c + 0.5, (a + b + 1.0) / 2.0, c - (a + b - 1.0) / 2.0],
        &[
            (a + 1.0) / 2.0,
            (b + 1.0) / 2.0,
            c - (a - 1.0) / 2.0,
            c - (b - 1.0) / 2.0,
        ],
    )
}
