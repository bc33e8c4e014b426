//! Normed division algebras `R`, `C`, `H`, `O` (Cayley–Dickson doubling) and
//! the Jordan algebra of 3×3 octonionic Hermitian matrices.

mod division;
mod jordan;

pub use division::{AlgebraElement, DivisionAlgebra};
pub use jordan::{jordan_trace_product, JordanHermitian3, IDEMPOTENCY_TOLERANCE};
