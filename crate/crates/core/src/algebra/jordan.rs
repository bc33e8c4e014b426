use super::division::{AlgebraElement, DivisionAlgebra};
use crate::error::{Error, Result};

const OCT: DivisionAlgebra = DivisionAlgebra::Octonion;

/// Maximum idempotency/trace defect accepted for externally supplied points.
pub const IDEMPOTENCY_TOLERANCE: f64 = 1e-9;

/// 3×3 Hermitian matrix over the octonions, stored as its real diagonal and
/// the upper off-diagonal entries `[x01, x02, x12]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JordanHermitian3 {
    pub diag: [f64; 3],
    pub off: [AlgebraElement; 3],
}

fn off_index(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!("diagonal index"),
    }
}

impl JordanHermitian3 {
    pub fn new(diag: [f64; 3], off: [AlgebraElement; 3]) -> Result<Self> {
        for x in &off {
            if x.algebra() != OCT {
                return Err(Error::AlgebraMismatch {
                    left: OCT.dim(),
                    right: x.algebra().dim(),
                });
            }
        }
        Ok(Self { diag, off })
    }

    pub fn zero() -> Self {
        Self {
            diag: [0.0; 3],
            off: [AlgebraElement::zero(OCT); 3],
        }
    }

    pub fn diagonal(diag: [f64; 3]) -> Self {
        Self {
            diag,
            ..Self::zero()
        }
    }

    /// Entry `(i, j)`; the lower triangle is the conjugate of the upper one.
    pub fn entry(&self, i: usize, j: usize) -> AlgebraElement {
        if i == j {
            AlgebraElement::real(OCT, self.diag[i])
        } else if i < j {
            self.off[off_index(i, j)]
        } else {
            self.off[off_index(i, j)].conj()
        }
    }

    /// Rank-one idempotent `v v† / |v|^2` with `v` holding `1` in slot
    /// `chart` and `(a, b)` in the remaining two slots, in order.
    pub fn from_chart(chart: usize, a: AlgebraElement, b: AlgebraElement) -> Result<Self> {
        if chart > 2 {
            return Err(Error::InvalidPoint(format!("chart index {chart} out of range")));
        }
        if a.algebra() != OCT || b.algebra() != OCT {
            return Err(Error::AlgebraMismatch {
                left: OCT.dim(),
                right: a.algebra().dim().min(b.algebra().dim()),
            });
        }
        let mut v = [AlgebraElement::zero(OCT); 3];
        let others: Vec<usize> = (0..3).filter(|&k| k != chart).collect();
        v[chart] = AlgebraElement::one(OCT);
        v[others[0]] = a;
        v[others[1]] = b;
        let s = 1.0 + a.norm_sqr() + b.norm_sqr();
        let mut x = Self::zero();
        for i in 0..3 {
            x.diag[i] = v[i].norm_sqr() / s;
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            x.off[off_index(i, j)] = (v[i] * v[j].conj()).scale(1.0 / s);
        }
        Ok(x)
    }

    /// Chart coordinates `(chart, a, b)` reproducing `self` through
    /// [`from_chart`](Self::from_chart), using the largest diagonal entry.
    pub fn chart_coordinates(&self) -> (usize, AlgebraElement, AlgebraElement) {
        let chart = (0..3)
            .max_by(|&i, &j| self.diag[i].total_cmp(&self.diag[j]))
            .expect("three entries");
        let others: Vec<usize> = (0..3).filter(|&k| k != chart).collect();
        let pivot = self.diag[chart];
        let a = self.entry(others[0], chart).scale(1.0 / pivot);
        let b = self.entry(others[1], chart).scale(1.0 / pivot);
        (chart, a, b)
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    fn matmul_entry(&self, other: &Self, i: usize, j: usize) -> AlgebraElement {
        (0..3).fold(AlgebraElement::zero(OCT), |acc, k| {
            acc + self.entry(i, k) * other.entry(k, j)
        })
    }

    /// Jordan product `(XY + YX) / 2`.
    pub fn jordan_product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            let z = self.matmul_entry(other, i, i) + other.matmul_entry(self, i, i);
            out.diag[i] = 0.5 * z.re();
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let z = self.matmul_entry(other, i, j) + other.matmul_entry(self, i, j);
            out.off[off_index(i, j)] = z.scale(0.5);
        }
        out
    }

    /// `Tr(X ∘ Y)`, evaluated as the Frobenius inner product.
    pub fn trace_product(&self, other: &Self) -> f64 {
        let d: f64 = self.diag.iter().zip(&other.diag).map(|(a, b)| a * b).sum();
        let o: f64 = self.off.iter().zip(&other.off).map(|(a, b)| a.dot(b)).sum();
        d + 2.0 * o
    }

    /// Largest entrywise deviation from `X ∘ X = X` and `Tr X = 1`.
    pub fn idempotency_defect(&self) -> f64 {
        let sq = self.jordan_product(self);
        let mut defect = (self.trace() - 1.0).abs();
        for i in 0..3 {
            defect = defect.max((sq.diag[i] - self.diag[i]).abs());
        }
        for k in 0..3 {
            defect = defect.max((sq.off[k] - self.off[k]).norm());
        }
        defect
    }

    pub fn check_idempotent(&self, tol: f64) -> Result<()> {
        let defect = self.idempotency_defect();
        if defect <= tol {
            Ok(())
        } else {
            Err(Error::InvalidPoint(format!(
                "not a trace-one idempotent (defect {defect:.3e})"
            )))
        }
    }

    /// Flat layout: three diagonal reals, then `x01`, `x02`, `x12` as eight
    /// reals each.
    pub fn to_flat(&self) -> Vec<f64> {
        let mut out = self.diag.to_vec();
        for x in &self.off {
            out.extend_from_slice(x.coeffs());
        }
        out
    }

    pub fn from_flat(values: &[f64]) -> Result<Self> {
        if values.len() != 27 {
            return Err(Error::InvalidPoint(format!(
                "expected 27 reals for an OP2 point, got {}",
                values.len()
            )));
        }
        let diag = [values[0], values[1], values[2]];
        let mut off = [AlgebraElement::zero(OCT); 3];
        for (k, chunk) in values[3..].chunks(8).enumerate() {
            off[k] = AlgebraElement::new(OCT, chunk)?;
        }
        Ok(Self { diag, off })
    }
}

/// `Tr(X ∘ Y)` for two trace-one idempotents; lies in `[0, 1]`.
pub fn jordan_trace_product(x: &JordanHermitian3, y: &JordanHermitian3) -> Result<f64> {
    x.check_idempotent(IDEMPOTENCY_TOLERANCE)?;
    y.check_idempotent(IDEMPOTENCY_TOLERANCE)?;
    Ok(x.trace_product(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn octonion() -> impl Strategy<Value = AlgebraElement> {
        prop::collection::vec(-1.5f64..1.5, 8).prop_map(|v| AlgebraElement::new(OCT, &v).unwrap())
    }

    #[test]
    fn origin_chart_point() {
        let z = AlgebraElement::zero(OCT);
        let x = JordanHermitian3::from_chart(0, z, z).unwrap();
        assert_eq!(x, JordanHermitian3::diagonal([1.0, 0.0, 0.0]));
    }

    #[test]
    fn chart_with_unit_entry() {
        let x = JordanHermitian3::from_chart(0, AlgebraElement::one(OCT), AlgebraElement::zero(OCT))
            .unwrap();
        assert_eq!(x.diag, [0.5, 0.5, 0.0]);
        assert_eq!(x.entry(0, 1), AlgebraElement::real(OCT, 0.5));
        assert!(x.idempotency_defect() < 1e-15);
    }

    #[test]
    fn orthogonal_idempotents() {
        let x = JordanHermitian3::diagonal([1.0, 0.0, 0.0]);
        let y = JordanHermitian3::diagonal([0.0, 1.0, 0.0]);
        assert_eq!(jordan_trace_product(&x, &x).unwrap(), 1.0);
        assert_eq!(jordan_trace_product(&x, &y).unwrap(), 0.0);
    }

    #[test]
    fn non_idempotent_input_is_rejected() {
        let x = JordanHermitian3::diagonal([0.5, 0.5, 0.0]);
        let y = JordanHermitian3::diagonal([1.0, 0.0, 0.0]);
        assert!(matches!(jordan_trace_product(&x, &y), Err(Error::InvalidPoint(_))));
    }

    #[test]
    fn flat_layout_round_trip() {
        let a = AlgebraElement::new(OCT, &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]).unwrap();
        let x = JordanHermitian3::from_chart(2, a, a.conj()).unwrap();
        let flat = x.to_flat();
        assert_eq!(flat.len(), 27);
        assert_eq!(JordanHermitian3::from_flat(&flat).unwrap(), x);
        assert!(JordanHermitian3::from_flat(&flat[1..]).is_err());
    }

    proptest! {
        #[test]
        fn chart_points_are_trace_one_idempotents(chart in 0usize..3, a in octonion(), b in octonion()) {
            let x = JordanHermitian3::from_chart(chart, a, b).unwrap();
            prop_assert!((x.trace() - 1.0).abs() < 1e-15 * 4.0);
            prop_assert!(x.idempotency_defect() < 1e-12);
        }

        #[test]
        fn chart_coordinates_reproduce_point(chart in 0usize..3, a in octonion(), b in octonion()) {
            let x = JordanHermitian3::from_chart(chart, a, b).unwrap();
            let (c, a2, b2) = x.chart_coordinates();
            let y = JordanHermitian3::from_chart(c, a2, b2).unwrap();
            prop_assert!(y.to_flat().iter().zip(x.to_flat()).all(|(p, q)| (p - q).abs() < 1e-12));
        }

        #[test]
        fn trace_product_is_in_unit_interval(a in octonion(), b in octonion(), c in octonion(), d in octonion(),
                                             i in 0usize..3, j in 0usize..3) {
            let x = JordanHermitian3::from_chart(i, a, b).unwrap();
            let y = JordanHermitian3::from_chart(j, c, d).unwrap();
            let tp = jordan_trace_product(&x, &y).unwrap();
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&tp));
            // Frobenius shortcut agrees with the trace of the Jordan product
            let direct = x.jordan_product(&y).trace();
            prop_assert!((tp - direct).abs() < 1e-12);
            // symmetric bilinear
            prop_assert!((tp - y.trace_product(&x)).abs() < 1e-15);
        }

        #[test]
        fn jordan_product_commutes(a in octonion(), b in octonion(), c in octonion(), d in octonion()) {
            let x = JordanHermitian3::from_chart(0, a, b).unwrap();
            let y = JordanHermitian3::from_chart(1, c, d).unwrap();
            let xy = x.jordan_product(&y).to_flat();
            let yx = y.jordan_product(&x).to_flat();
            prop_assert!(xy.iter().zip(&yx).all(|(p, q)| (p - q).abs() < 1e-12));
        }
    }

    #[test]
    fn trace_product_one_only_for_equal_points() {
        let a = AlgebraElement::new(OCT, &[0.3, -0.1, 0.2, 0.0, 0.5, 0.1, -0.3, 0.2]).unwrap();
        let x = JordanHermitian3::from_chart(0, a, a).unwrap();
        assert_relative_eq!(x.trace_product(&x), 1.0, epsilon = 1e-15);
        let y = JordanHermitian3::from_chart(0, a, a.scale(1.01)).unwrap();
        assert!(x.trace_product(&y) < 1.0);
    }
}
