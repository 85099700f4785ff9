//! Exact scalars and the dense elimination kernel shared by every other module.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{is_prime, Field, Scalar, PRIME_CANDIDATES};
pub use subspace::Subspace;

pub(crate) use scalar::parse_rational;
