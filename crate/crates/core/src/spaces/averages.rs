use std::f64::consts::PI;
use std::fmt;

use num_traits::One;

use super::descriptor::{Family, SpaceDescriptor};
use super::measure::RadialMeasure;
use super::metric::volume;
use crate::error::Result;
use crate::specfun::{ln_beta, log_gamma, rational, Rational, Scalar};

/// Gauss–Legendre nodes used for `∫ (v - v²) dξ`; the integrand is analytic
/// in `r` on `[0, π]`.
const SYM_DIFF_NODES: usize = 512;

/// `γ(Q) = (√π/4)(d + d0) Γ(d0/2) / Γ((d0+1)/2)`.
pub fn gamma_const(space: &SpaceDescriptor) -> f64 {
    let d = space.d() as f64;
    let d0 = space.d0() as f64;
    let ratio = (log_gamma(d0 / 2.0).expect("d0 >= 1") - log_gamma((d0 + 1.0) / 2.0).expect("d0 >= 1")).exp();
    PI.sqrt() / 4.0 * (d + d0) * ratio
}

/// A constant of the form `q` or `q·π` with `q` rational.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactConstant {
    pub coefficient: Rational,
    pub times_pi: bool,
}

impl ExactConstant {
    pub fn to_f64(&self) -> f64 {
        let q = self.coefficient.to_f64();
        if self.times_pi {
            q * PI
        } else {
            q
        }
    }
}

impl fmt::Display for ExactConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.coefficient.numer();
        let den = self.coefficient.denom();
        let pi = if self.times_pi { "π" } else { "" };
        let num = if self.times_pi && num.is_one() {
            String::new()
        } else {
            num.to_string()
        };
        if den.is_one() {
            write!(f, "{num}{pi}")
        } else {
            write!(f, "{num}{pi}/{den}")
        }
    }
}

fn factorial(k: u32) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, j| acc * rational(j, 1))
}

/// `γ(Q)` in closed form.
pub fn gamma_exact(space: &SpaceDescriptor) -> ExactConstant {
    let n = space.n() as i64;
    let (coefficient, times_pi) = match space.family() {
        Family::Sphere => {
            let d = space.d();
            let k = d / 2;
            let pow4 = (0..k).fold(Rational::one(), |acc, _| acc * rational(4, 1));
            let ratio = factorial(k) * factorial(k) / factorial(2 * k);
            if d.is_multiple_of(2) {
                (pow4 * ratio, false)
            } else {
                (rational(2 * k as i64 + 1, 2) / (pow4 * ratio), true)
            }
        }
        Family::RealProj => (rational(n + 1, 4), true),
        Family::ComplexProj => (rational(n + 1, 1), false),
        Family::QuatProj => (rational(4 * (n + 1), 3), false),
        Family::OctProj => (rational(192, 35), false),
    };
    ExactConstant {
        coefficient,
        times_pi,
    }
}

/// Average chordal distance `⟨τ⟩ = B((d+1)/2, d0/2) / B(d/2, d0/2)`.
pub fn avg_tau(space: &SpaceDescriptor) -> f64 {
    let a = space.d() as f64 / 2.0;
    let b = space.d0() as f64 / 2.0;
    (ln_beta(a + 0.5, b).expect("positive") - ln_beta(a, b).expect("positive")).exp()
}

/// `⟨θ^Δ(ξ)⟩ = ∫ (v(r) - v(r)²) dξ(r)`.
pub fn avg_sym_diff(space: &SpaceDescriptor, xi: &RadialMeasure) -> Result<f64> {
    xi.validate()?;
    let mut err = None;
    let value = xi.integrate(SYM_DIFF_NODES, |r| match volume(space, r) {
        Ok(v) => v - v * v,
        Err(e) => {
            err.get_or_insert(e);
            0.0
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(value),
    }
}
