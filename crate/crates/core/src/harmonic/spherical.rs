use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::spaces::SpaceDescriptor;
use crate::specfun::{jacobi_eval, jacobi_norm_m, ln_jacobi_at_one, rational, rising, Rational};

/// Relative tolerance between the Γ-ratio value of `m_l` and its exact
/// integer.
const DIM_TOLERANCE: f64 = 1e-6;

/// Normalized spherical function `φ_l(t)`.
pub fn phi_l(space: &SpaceDescriptor, l: usize, t: f64) -> Result<f64> {
    let (a, b) = (space.alpha(), space.beta());
    let p = jacobi_eval(a, b, l, t)?;
    Ok(p / ln_jacobi_at_one(a, l)?.exp())
}

fn half(k: u32) -> Rational {
    rational(k as i64, 2)
}

/// `m_l = (2l+α+β+1)(α+β+2)_{l-1}(α+1)_l / (l! (β+1)_l)` in exact arithmetic.
fn exact_dim(space: &SpaceDescriptor, l: usize) -> Rational {
    if l == 0 {
        return Rational::one();
    }
    let a = half(space.d()) - Rational::one();
    let b = half(space.d0()) - Rational::one();
    let lr = Rational::from_integer((l as i64).into());
    let two = rational(2, 1);
    let l32 = l as u32;
    (two * &lr + &a + &b + Rational::one())
        * rising(&(a.clone() + &b + rational(2, 1)), l32 - 1)
        * rising(&(a + Rational::one()), l32)
        / (rising(&Rational::one(), l32) * rising(&(b + Rational::one()), l32))
}

fn to_integer(l: usize, m: &Rational) -> Result<BigUint> {
    if !m.is_integer() || *m <= Rational::zero() {
        return Err(Error::NonIntegralDimension {
            l,
            value: m.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(m.to_integer().to_biguint().expect("positive"))
}

/// `m_l` through the Γ-ratio formula `M_l κ^{-1} P_l(1)^2`, in floating point.
pub fn dim_m_float(space: &SpaceDescriptor, l: usize) -> Result<f64> {
    let (a, b) = (space.alpha(), space.beta());
    let ln = jacobi_norm_m(a, b, l)?.ln() - space.kappa().ln() + 2.0 * ln_jacobi_at_one(a, l)?;
    Ok(ln.exp())
}

fn check_float(space: &SpaceDescriptor, l: usize, exact: &BigUint) -> Result<()> {
    let value = dim_m_float(space, l)?;
    let target = exact.to_f64().unwrap_or(f64::INFINITY);
    if (value - target).abs() > DIM_TOLERANCE * target.max(1.0) {
        return Err(Error::NonIntegralDimension { l, value });
    }
    Ok(())
}

/// Dimension `m_l` of the `l`-th irreducible component, as an exact integer.
///
/// Fails if the exact value is not a positive integer or if the Γ-ratio
/// evaluation disagrees with it beyond a relative `1e-6`.
pub fn dim_m(space: &SpaceDescriptor, l: usize) -> Result<BigUint> {
    let m = to_integer(l, &exact_dim(space, l))?;
    check_float(space, l, &m)?;
    Ok(m)
}

/// `m_0, ..., m_lmax`, using the ratio `m_l / m_{l-1}` for speed.
pub fn dim_m_table(space: &SpaceDescriptor, lmax: usize) -> Result<Vec<BigUint>> {
    let a = half(space.d()) - Rational::one();
    let b = half(space.d0()) - Rational::one();
    let mut out = Vec::with_capacity(lmax + 1);
    let mut m = Rational::one();
    for l in 0..=lmax {
        if l == 1 {
            m = exact_dim(space, 1);
        } else if l > 1 {
            let lr = Rational::from_integer((l as i64).into());
            let s = rational(2, 1) * &lr + &a + &b;
            m = m * (s.clone() + Rational::one()) / (s - Rational::one())
                * (a.clone() + &b + &lr)
                * (a.clone() + &lr)
                / (lr.clone() * (b.clone() + &lr));
        }
        let int = to_integer(l, &m)?;
        check_float(space, l, &int)?;
        out.push(int);
    }
    Ok(out)
}

pub(crate) fn require_positive_degree(func: &'static str, l: usize) -> Result<()> {
    if l == 0 {
        Err(domain(func, "degree must be at least 1"))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn space(s: &str) -> SpaceDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let s2 = space("S2");
        for &t in &[-1.0, -0.4, 0.3, 1.0] {
            assert_eq!(phi_l(&s2, 0, t).unwrap(), 1.0);
            assert_relative_eq!(phi_l(&s2, 2, t).unwrap(), 1.5 * t * t - 0.5, epsilon = 1e-15);
        }
        for label in ["S3", "RP2", "CP3", "HP2", "OP2"] {
            let s = space(label);
            let (d, d0) = (s.d() as f64, s.d0() as f64);
            for &t in &[-1.0, -0.2, 0.6, 1.0] {
                let want = ((d + d0) * t + d - d0) / (2.0 * d);
                assert_relative_eq!(phi_l(&s, 1, t).unwrap(), want, epsilon = 1e-14);
            }
            assert_relative_eq!(phi_l(&s, 7, 1.0).unwrap(), 1.0, epsilon = 1e-13);
        }
        assert!(phi_l(&s2, 1, 1.5).is_err());
    }

    #[test]
    fn dims() {
        let s2 = space("S2");
        let got: Vec<u64> = (0..6).map(|l| dim_m(&s2, l).unwrap().to_u64().unwrap()).collect();
        assert_eq!(got, [1, 3, 5, 7, 9, 11]);
        assert_eq!(dim_m(&space("S1"), 4).unwrap().to_u64(), Some(2));
        let m1 = |s: &str| dim_m(&space(s), 1).unwrap().to_u64().unwrap();
        assert_eq!(m1("CP2"), 8);
        assert_eq!(m1("HP2"), 14);
        assert_eq!(m1("OP2"), 26);
        assert_eq!(m1("RP2"), 5);
    }

    #[test]
    fn table_matches_direct() {
        for label in ["S1", "S4", "RP3", "CP2", "HP3", "OP2"] {
            let s = space(label);
            let table = dim_m_table(&s, 30).unwrap();
            for (l, m) in table.iter().enumerate() {
                assert_eq!(*m, dim_m(&s, l).unwrap(), "{label} l={l}");
            }
        }
    }
}
