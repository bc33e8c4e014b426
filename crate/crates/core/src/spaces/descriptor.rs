use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::DivisionAlgebra;
use crate::error::{Error, Result};
use crate::specfun::ln_beta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Sphere,
    RealProj,
    ComplexProj,
    QuatProj,
    OctProj,
}

impl Family {
    /// Division algebra of a projective family; `None` for spheres.
    pub fn algebra(self) -> Option<DivisionAlgebra> {
        match self {
            Family::Sphere => None,
            Family::RealProj => Some(DivisionAlgebra::Real),
            Family::ComplexProj => Some(DivisionAlgebra::Complex),
            Family::QuatProj => Some(DivisionAlgebra::Quaternion),
            Family::OctProj => Some(DivisionAlgebra::Octonion),
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Family::Sphere => "S",
            Family::RealProj => "RP",
            Family::ComplexProj => "CP",
            Family::QuatProj => "HP",
            Family::OctProj => "OP",
        }
    }
}

/// The space `Q(d, d0)` together with its family tag.
///
/// For spheres `n = 1` and `d0 = d`; for projective spaces `d = n·d0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceDescriptor {
    family: Family,
    n: u32,
    d: u32,
    d0: u32,
    kappa: f64,
}

/// Builds a space descriptor. `dim` is the projective dimension `n` for
/// projective families and the sphere dimension `d` for [`Family::Sphere`].
///
/// Projective lines are normalized to the homeomorphic sphere `S^{d0}`;
/// `OP^n` exists only for `n = 2`.
pub fn make_space(family: Family, dim: u32) -> Result<SpaceDescriptor> {
    if dim == 0 {
        return Err(Error::InvalidSpace("dimension must be at least 1".into()));
    }
    let (family, n, d, d0) = match family {
        Family::Sphere => (Family::Sphere, 1, dim, dim),
        Family::OctProj if dim != 2 => {
            return Err(Error::InvalidSpace(format!(
                "OP^{dim}: octonionic projective spaces do not exist for n > 2 and OP^1 is S^8; only OP2 is supported"
            )))
        }
        other => {
            let d0 = other.algebra().expect("projective family").dim() as u32;
            if dim == 1 {
                (Family::Sphere, 1, d0, d0)
            } else {
                (other, dim, dim * d0, d0)
            }
        }
    };
    let kappa = (-ln_beta(d as f64 / 2.0, d0 as f64 / 2.0)?).exp();
    Ok(SpaceDescriptor {
        family,
        n,
        d,
        d0,
        kappa,
    })
}

impl SpaceDescriptor {
    pub fn sphere(d: u32) -> Result<Self> {
        make_space(Family::Sphere, d)
    }

    pub fn projective(family: Family, n: u32) -> Result<Self> {
        make_space(family, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn d0(&self) -> u32 {
        self.d0
    }

    /// `κ = B(d/2, d0/2)^{-1}`.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Jacobi parameter `d/2 - 1` of the spherical functions.
    pub fn alpha(&self) -> f64 {
        self.d as f64 / 2.0 - 1.0
    }

    /// Jacobi parameter `d0/2 - 1` of the spherical functions.
    pub fn beta(&self) -> f64 {
        self.d0 as f64 / 2.0 - 1.0
    }

    /// Number of reals in a stored representative.
    pub fn representative_len(&self) -> usize {
        match self.family {
            Family::Sphere => self.d as usize + 1,
            Family::OctProj => 27,
            _ => (self.n as usize + 1) * self.d0 as usize,
        }
    }

    pub fn supports_uniform_sampling(&self) -> bool {
        self.family != Family::OctProj
    }

    /// Short label such as `S2`, `CP3` or `OP2`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Sphere => format!("S{}", self.d),
            f => format!("{}{}", f.prefix(), self.n),
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for SpaceDescriptor {
    type Err = Error;

    /// Parses `S<d> | RP<n> | CP<n> | HP<n> | OP2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = [
            ("RP", Family::RealProj),
            ("CP", Family::ComplexProj),
            ("HP", Family::QuatProj),
            ("OP", Family::OctProj),
            ("S", Family::Sphere),
        ]
        .iter()
        .find_map(|(p, f)| s.strip_prefix(p).map(|rest| (*f, rest)))
        .ok_or_else(|| Error::InvalidSpace(format!("unrecognized space `{s}`")))?;
        let dim: u32 = rest
            .parse()
            .map_err(|_| Error::InvalidSpace(format!("bad dimension in `{s}`")))?;
        make_space(family, dim)
    }
}
