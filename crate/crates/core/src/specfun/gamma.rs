use crate::error::{domain, Error, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("log_gamma", format!("argument {x} is not positive")));
    }
    Ok(libm::lgamma_r(x).0)
}

/// Euler beta function `B(a, b) = Γ(a)Γ(b)/Γ(a+b)` for `a, b > 0`.
pub fn beta_fn(a: f64, b: f64) -> Result<f64> {
    ln_beta(a, b).map(f64::exp)
}

/// `ln B(a, b)` for `a, b > 0`.
pub fn ln_beta(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(domain("beta_fn", format!("arguments ({a}, {b}) must be positive")));
    }
    Ok(log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?)
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `Π Γ(num_i) / Π Γ(den_j)` for real (possibly negative) arguments.
///
/// A pole in the denominator makes the ratio vanish (`1/Γ` is entire); a pole
/// in the numerator is an error.
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    if let Some(&x) = num.iter().find(|&&x| is_pole(x)) {
        return Err(Error::Pole {
            func: "gamma_ratio",
            detail: format!("Γ({x}) in numerator"),
        });
    }
    if den.iter().any(|&x| is_pole(x)) {
        return Ok(0.0);
    }
    let mut log = 0.0;
    let mut sign = 1i32;
    for &x in num {
        let (lg, s) = libm::lgamma_r(x);
        log += lg;
        sign *= s;
    }
    for &x in den {
        let (lg, s) = libm::lgamma_r(x);
        log -= lg;
        sign *= s;
    }
    Ok(sign as f64 * log.exp())
}

/// Regularized incomplete beta function `I_x(a, b)`.
pub fn beta_reg(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("beta_reg", format!("x = {x} outside [0, 1]")));
    }
    beta_reg_split(a, b, x, 1.0 - x)
}

/// `I_x(a, b)` with `y = 1 - x` supplied separately so callers can avoid
/// cancellation when `x` is close to one.
pub(crate) fn beta_reg_split(a: f64, b: f64, x: f64, y: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(domain("beta_reg", format!("parameters ({a}, {b}) must be positive")));
    }
    if x <= 0.0 {
        return Ok(0.0);
    }
    if y <= 0.0 {
        return Ok(1.0);
    }
    let ln_front = a * x.ln() + b * y.ln() - ln_beta(a, b)?;
    if x < (a + 1.0) / (a + b + 2.0) {
        Ok(ln_front.exp() * beta_cf(a, b, x)? / a)
    } else {
        Ok(1.0 - ln_front.exp() * beta_cf(b, a, y)? / b)
    }
}

/// Continued fraction for the incomplete beta function, modified Lentz.
fn beta_cf(a: f64, b: f64, x: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..10_000 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            return Ok(h);
        }
    }
    Err(Error::NoConvergence)
}
