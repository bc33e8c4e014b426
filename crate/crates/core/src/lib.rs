//! Numerical verification of distance-sum invariance principles on the
//! compact connected two-point homogeneous spaces: the spheres `S^d`, the
//! projective spaces `RP^n`, `CP^n`, `HP^n` and the octonionic plane `OP^2`.
//!
//! The crate is layered bottom-up:
//!
//! * [`specfun`] – gamma/beta functions, Pochhammer symbols, Jacobi
//!   polynomials, Gauss–Jacobi quadrature, terminating `3F2` series and the
//!   Jacobi square-integral identities, in floating and exact arithmetic.
//! * [`algebra`] – the normed division algebras and the exceptional Jordan
//!   algebra used as a point model for `OP^2`.
//! * [`spaces`] – space descriptors, points, metrics, ball volumes, sampling
//!   and the first spherical-function embedding.
//! * [`harmonic`] – spherical functions, dimensions and truncated kernel
//!   expansions of the chordal and symmetric-difference metrics.
//! * [`discrepancy`] – distance sums, three routes to the quadratic ball
//!   discrepancy and the `L1`/`L2` invariance checks.
//! * [`optimize`] – distance-sum maximisation over point configurations.
//! * [`checks`] – seeded identity checks shared by the CLI and the tests.

pub mod algebra;
pub mod checks;
pub mod discrepancy;
mod error;
pub mod harmonic;
pub mod numeric;
pub mod optimize;
pub mod spaces;
pub mod specfun;

pub use error::{Error, Result};
