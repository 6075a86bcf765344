//! Noncommutative Groebner bases over path algebras, strong-Koszul certificates
//! and quadratic duals.

mod dual;
pub mod linalg;
mod order;
pub mod path;
mod reduce;

use thiserror::Error;

pub use dual::quadratic_dual;
pub use order::AdmissibleOrder;
pub use path::{coeff, Coeff, Path, PathCombination};
pub use reduce::{
    certify_strong_koszul, complete_reduce, is_finite_dimensional, leading_term, longest_normal_path, normal_form_count,
    overlap, reduction_ceiling, simple_reduce, tip, Certificate, CompleteReduction, GroebnerBasis, Overlap,
    OverlapRecord, SimpleReduction,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("the zero element has no tip")]
    ZeroTip,
    #[error("paths in a combination do not share source and target")]
    NotUniform,
    #[error("reduction did not terminate within {0} steps")]
    CeilingExceeded(usize),
    #[error("relations are not quadratic")]
    NotQuadratic,
    #[error("the algebra is infinite-dimensional between these vertices")]
    InfiniteDimensional,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}
