//! Special functions: gamma and beta functions, Pochhammer symbols, Jacobi
//! polynomials, Gauss–Jacobi quadrature, terminating `3F2` series and the
//! Jacobi square-integral identities.
//!
//! Everything that is a polynomial or rational function of its parameters is
//! written generically over [`Scalar`] so the same code runs in `f64` and in
//! exact [`Rational`] arithmetic.

mod gamma;
mod hypergeometric;
mod identities;
mod jacobi;
mod pochhammer;
mod quadrature;
mod scalar;

pub(crate) use gamma::beta_reg_split;
pub use gamma::{beta_fn, beta_reg, gamma_ratio, ln_beta, log_gamma};
pub use hypergeometric::{f32_terminating, watson_closed, watson_condition};
pub use identities::{
    jacobi_square_integral, jacobi_square_integral_printed, t_ratio, w_closed, w_closed_printed,
    w_sum, SquareIntegralMethod,
};
pub use jacobi::{jacobi_at_one, jacobi_eval, jacobi_norm_m, ln_jacobi_at_one, JacobiTable};
pub use pochhammer::{falling, rising};
pub use quadrature::{gauss_jacobi, gauss_legendre, QuadratureRule};
pub use scalar::{rational, Rational, Scalar};
