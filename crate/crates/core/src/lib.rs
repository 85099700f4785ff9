//! Exact cohomology of DG structures on the three-variable skew polynomial
//! algebra, with classification, presentations and resolution checks.

pub mod classify;
pub mod config;
pub mod cohomology;
pub mod dg;
pub mod error;
pub mod linalg;
pub mod presentation;
pub mod resolution;
pub mod skew;
pub mod suite;
pub mod transform;

pub use classify::{classify, crosscheck, CaseLabel, Classification, GorensteinPrediction};
pub use cohomology::{Cohomology, CohomologyClass, CohomologyReport};
pub use dg::DgSpec;
pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar, Subspace};
pub use presentation::{presentation_of_case, AlgebraPresentation, NcPolynomial, TruncatedAlgebra};
pub use skew::{GradedElement, Monomial};
pub use transform::{apply_transform, MonomialMatrix};
