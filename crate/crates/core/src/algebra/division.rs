use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the four normed division algebras over the reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisionAlgebra {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl DivisionAlgebra {
    pub const fn dim(self) -> usize {
        match self {
            DivisionAlgebra::Real => 1,
            DivisionAlgebra::Complex => 2,
            DivisionAlgebra::Quaternion => 4,
            DivisionAlgebra::Octonion => 8,
        }
    }

    pub fn from_dim(dim: usize) -> Option<Self> {
        match dim {
            1 => Some(DivisionAlgebra::Real),
            2 => Some(DivisionAlgebra::Complex),
            4 => Some(DivisionAlgebra::Quaternion),
            8 => Some(DivisionAlgebra::Octonion),
            _ => None,
        }
    }
}

/// Element `x_0 + x_1 e_1 + ... + x_{d0-1} e_{d0-1}` of a division algebra.
///
/// Multiplication follows the Cayley–Dickson rule
/// `(a, b)(c, d) = (ac - d̄b, da + bc̄)` applied recursively to the halves of
/// the coefficient array, so `e1 e2 = e3` in `H`.
#[derive(Clone, Copy, PartialEq)]
pub struct AlgebraElement {
    algebra: DivisionAlgebra,
    coeffs: [f64; 8],
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("AlgebraElement")
            .field(&self.algebra)
            .field(&self.coeffs())
            .finish()
    }
}

impl AlgebraElement {
    pub fn new(algebra: DivisionAlgebra, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::AlgebraMismatch {
                left: algebra.dim(),
                right: coeffs.len(),
            });
        }
        let mut c = [0.0; 8];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Self { algebra, coeffs: c })
    }

    pub fn zero(algebra: DivisionAlgebra) -> Self {
        Self {
            algebra,
            coeffs: [0.0; 8],
        }
    }

    pub fn real(algebra: DivisionAlgebra, x: f64) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[0] = x;
        e
    }

    pub fn one(algebra: DivisionAlgebra) -> Self {
        Self::real(algebra, 1.0)
    }

    /// Basis unit `e_i` (`e_0 = 1`).
    pub fn basis(algebra: DivisionAlgebra, i: usize) -> Self {
        assert!(i < algebra.dim(), "basis index out of range");
        let mut e = Self::zero(algebra);
        e.coeffs[i] = 1.0;
        e
    }

    pub fn algebra(&self) -> DivisionAlgebra {
        self.algebra
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.algebra.dim()]
    }

    pub fn re(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs[1..] {
            *c = -*c;
        }
        out
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean inner product of coefficient vectors, `Re(x ȳ)`.
    pub fn dot(&self, other: &Self) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs {
            *c *= s;
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.dim(),
                right: other.algebra.dim(),
            });
        }
        let n = self.algebra.dim();
        let mut out = Self::zero(self.algebra);
        cd_mul(&self.coeffs[..n], &other.coeffs[..n], &mut out.coeffs[..n]);
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let mut out = *self;
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f(*a, *b);
        }
        out
    }
}

fn conj_into(x: &[f64], out: &mut [f64]) {
    out[0] = x[0];
    for (o, v) in out[1..].iter_mut().zip(&x[1..]) {
        *o = -v;
    }
}

fn cd_mul(x: &[f64], y: &[f64], out: &mut [f64]) {
    let n = x.len();
    if n == 1 {
        out[0] = x[0] * y[0];
        return;
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let mut d_bar = [0.0; 4];
    let mut c_bar = [0.0; 4];
    conj_into(d, &mut d_bar[..h]);
    conj_into(c, &mut c_bar[..h]);
    let mut t1 = [0.0; 4];
    let mut t2 = [0.0; 4];
    cd_mul(a, c, &mut t1[..h]);
    cd_mul(&d_bar[..h], b, &mut t2[..h]);
    for i in 0..h {
        out[i] = t1[i] - t2[i];
    }
    cd_mul(d, a, &mut t1[..h]);
    cd_mul(b, &c_bar[..h], &mut t2[..h]);
    for i in 0..h {
        out[h + i] = t1[i] + t2[i];
    }
}

impl Add for AlgebraElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl Sub for AlgebraElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl Neg for AlgebraElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

/// Panics on algebra mismatch; use [`AlgebraElement::checked_mul`] otherwise.
impl Mul for AlgebraElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("algebra mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use DivisionAlgebra::*;

    fn element(algebra: DivisionAlgebra) -> impl Strategy<Value = AlgebraElement> {
        prop::collection::vec(-2.0f64..2.0, algebra.dim())
            .prop_map(move |v| AlgebraElement::new(algebra, &v).unwrap())
    }

    fn close(x: &AlgebraElement, y: &AlgebraElement, tol: f64) -> bool {
        (*x - *y).norm() <= tol * (1.0 + x.norm().max(y.norm()))
    }

    #[test]
    fn unit_is_neutral() {
        for alg in [Real, Complex, Quaternion, Octonion] {
            let x = AlgebraElement::new(alg, &[0.3, -1.2, 0.7, 2.0, 0.1, -0.4, 0.9, 1.1][..alg.dim()])
                .unwrap();
            assert_eq!(AlgebraElement::one(alg) * x, x);
            assert_eq!(x * AlgebraElement::one(alg), x);
        }
    }

    #[test]
    fn quaternion_table() {
        let e = |i| AlgebraElement::basis(Quaternion, i);
        assert_eq!(e(1) * e(2), e(3));
        assert_eq!(e(2) * e(3), e(1));
        assert_eq!(e(3) * e(1), e(2));
        assert_eq!(e(2) * e(1), -e(3));
        for i in 1..4 {
            assert_eq!(e(i) * e(i), -e(0));
        }
    }

    #[test]
    fn octonion_units_square_to_minus_one_and_anticommute() {
        let e = |i| AlgebraElement::basis(Octonion, i);
        for i in 1..8 {
            assert_eq!(e(i) * e(i), -e(0));
            for j in 1..8 {
                if i != j {
                    assert_eq!(e(i) * e(j), -(e(j) * e(i)));
                }
            }
        }
    }

    #[test]
    fn mismatch_is_an_error() {
        let x = AlgebraElement::one(Complex);
        let y = AlgebraElement::one(Quaternion);
        assert!(matches!(x.checked_mul(&y), Err(Error::AlgebraMismatch { .. })));
        assert!(AlgebraElement::new(Quaternion, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn octonions_are_not_associative() {
        let e = |i| AlgebraElement::basis(Octonion, i);
        let assoc = (e(1) * e(2)) * e(4) - e(1) * (e(2) * e(4));
        assert_relative_eq!(assoc.norm(), 2.0);
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(x in element(Octonion), y in element(Octonion)) {
            let lhs = (x * y).norm();
            prop_assert!((lhs - x.norm() * y.norm()).abs() <= 1e-12 * (1.0 + lhs));
        }

        #[test]
        fn conjugation_identities(x in element(Octonion)) {
            let sum = x + x.conj();
            prop_assert!(close(&sum, &AlgebraElement::real(Octonion, 2.0 * x.re()), 1e-15));
            let prod = x * x.conj();
            prop_assert!(close(&prod, &AlgebraElement::real(Octonion, x.norm_sqr()), 1e-14));
        }

        #[test]
        fn octonions_are_alternative(x in element(Octonion), y in element(Octonion)) {
            prop_assert!(close(&(x * (x * y)), &((x * x) * y), 1e-12));
            prop_assert!(close(&((y * x) * x), &(y * (x * x)), 1e-12));
        }

        #[test]
        fn moufang_identity(x in element(Octonion), y in element(Octonion), z in element(Octonion)) {
            prop_assert!(close(&((x * y) * (z * x)), &(x * ((y * z) * x)), 1e-11));
        }

        #[test]
        fn quaternions_associate(x in element(Quaternion), y in element(Quaternion), z in element(Quaternion)) {
            prop_assert!(close(&((x * y) * z), &(x * (y * z)), 1e-13));
        }

        #[test]
        fn complex_numbers_commute(x in element(Complex), y in element(Complex)) {
            prop_assert!(close(&(x * y), &(y * x), 1e-15));
        }
    }
}
