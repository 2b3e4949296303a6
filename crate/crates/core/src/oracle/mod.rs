//! Brute-force linear-algebra model of a Brauer graph algebra, independent of
//! the combinatorial machinery. Everything here works from the quiver and
//! relations alone.

pub mod algebra;
pub mod compare;
pub mod field;
pub mod linalg;
pub mod module;
pub mod resolve;
pub mod yoneda;

use thiserror::Error;

pub use algebra::{AlgElem, FiniteDimAlgebra};
pub use field::{FieldKind, Scalar};
pub use linalg::{Echelon, SparseVec};
pub use module::{FreeModule, Rep};
pub use resolve::Resolution;

use crate::graph::BrauerGraph;
use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("path enumeration exceeded the size guard ({0} paths)")]
    TooLarge(usize),
    #[error("some path of length {0} survives; the length bound is too small")]
    NotNilpotent(usize),
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error("a chain map could not be lifted: {0}")]
    Lift(String),
    #[error("graded computation requested for an algebra with inhomogeneous relations")]
    NotGraded,
}

/// Builds the algebra of `g` from all of its relations.
pub fn build_algebra(g: &BrauerGraph, p: &Presentation, field: FieldKind) -> Result<FiniteDimAlgebra, OracleError> {
    FiniteDimAlgebra::build(&p.quiver, &p.relations, g.nilpotency_bound() + 1, field, algebra::DEFAULT_MAX_PATHS)
}
