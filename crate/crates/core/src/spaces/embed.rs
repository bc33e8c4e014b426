use super::descriptor::{Family, SpaceDescriptor};
use super::point::Point;
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};

/// `m1 = d(d + d0 + 2) / (2 d0)`, the dimension of the first nontrivial
/// eigenspace.
pub fn embedding_dim(space: &SpaceDescriptor) -> usize {
    let (d, d0) = (space.d() as usize, space.d0() as usize);
    d * (d + d0 + 2) / (2 * d0)
}

/// Orthonormal coordinates of the traceless part of `diag`: Helmert
/// contrasts `(Σ_{i<j} p_i - j p_j) / √(j(j+1))`, `j = 1..k-1`.
fn helmert(diag: &[f64], out: &mut Vec<f64>) {
    let mut prefix = 0.0;
    for j in 1..diag.len() {
        prefix += diag[j - 1];
        let jf = j as f64;
        out.push((prefix - jf * diag[j]) / (jf * (jf + 1.0)).sqrt());
    }
}

fn normalize(mut v: Vec<f64>) -> Vec<f64> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    v
}

/// Maps `p` to the unit sphere of `R^{m1}`: the projector `P` minus its
/// trace part, in orthonormal coordinates, scaled to unit Frobenius norm.
/// On spheres this is the identity.
pub fn embed_pi1(space: &SpaceDescriptor, p: &Point) -> Result<Vec<f64>> {
    if !p.fits(space) {
        return Err(Error::SpaceMismatch);
    }
    let mut out = Vec::with_capacity(embedding_dim(space));
    match p {
        Point::Sphere(x) => return Ok(x.clone()),
        Point::Proj(x) => {
            let diag: Vec<f64> = x.iter().map(AlgebraElement::norm_sqr).collect();
            helmert(&diag, &mut out);
            for i in 0..x.len() {
                for j in i + 1..x.len() {
                    let e = x[i] * x[j].conj();
                    out.extend(e.coeffs().iter().map(|c| c * std::f64::consts::SQRT_2));
                }
            }
        }
        Point::Jordan(x) => {
            helmert(&x.diag, &mut out);
            for e in &x.off {
                out.extend(e.coeffs().iter().map(|c| c * std::f64::consts::SQRT_2));
            }
        }
    }
    debug_assert!(space.family() == Family::Sphere || out.len() == embedding_dim(space));
    Ok(normalize(out))
}
