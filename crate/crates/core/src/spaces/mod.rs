//! The spaces `Q(d, d0)`: descriptors, point models, metrics, ball volumes,
//! sampling, analytic averages and the first spherical-function embedding.
//!
//! Point models:
//!
//! * `S^d` – unit vectors in `R^{d+1}`.
//! * `RP^n`, `CP^n`, `HP^n` – unit vectors in `F^{n+1}`, defined up to a right
//!   unit scalar. Only phase-invariant quantities are ever computed.
//! * `OP^2` – trace-one idempotents of the 3×3 octonionic Hermitian Jordan
//!   algebra.
//!
//! The geodesic distance is normalized to diameter `π`; on projective spaces
//! `cos θ = 2|⟨x, y⟩|^2 - 1`, which together with `τ = sin(θ/2)` gives the
//! Fubini–Study chordal identity `τ^2 = 1 - |⟨x, y⟩|^2`.

mod averages;
mod descriptor;
mod embed;
mod io;
mod measure;
mod metric;
mod point;
mod sample;

pub use averages::{avg_sym_diff, avg_tau, gamma_const, gamma_exact, ExactConstant};
pub use descriptor::{make_space, Family, SpaceDescriptor};
pub use embed::{embed_pi1, embedding_dim};
pub use io::{PointSetFile, SpaceFile};
pub use measure::RadialMeasure;
pub use metric::{cos_theta, tau, theta, volume, COS_TOLERANCE};
pub use point::{Point, PointSet, Provenance};
pub use sample::{sample, sample_point, Sampler};
