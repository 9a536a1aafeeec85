use thiserror::Error;

use crate::combinatorics::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subsets live in different ambients: (n={n1}, k={k1}) vs (n={n2}, k={k2})")]
    MismatchedAmbient { n1: usize, k1: usize, n2: usize, k2: usize },
    #[error("invalid {k}-subset of [1, {n}]: {reason}")]
    InvalidSubset { n: usize, k: usize, reason: String },
    #[error("a polygon needs at least {min} vertices, got {n}")]
    DegeneratePolygon { n: usize, min: usize },
    #[error("arcs {0} and {1} cross")]
    NotRigid(Arc, Arc),
    #[error("{0} is a boundary arc")]
    BoundaryArc(Arc),
    #[error("frozen set contains the boundary arc {0}")]
    BoundaryFrozen(Arc),
    #[error("not a triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("morphisms are not composable: target {0:?} differs from source {1:?}")]
    NonComposable(Vec<usize>, Vec<usize>),
    #[error("operation only defined for k = 2, got k = {0}")]
    UnsupportedK(usize),
    #[error("mesh propagation could not reach vertex {0}")]
    NonPropagatable(Arc),
    #[error("propagated value at {0} is zero")]
    DivisionByZero(Arc),
    #[error("Ptolemy propagation hit a zero value at {0}")]
    ZeroEncountered(Arc),
    #[error("no value for {0}")]
    MissingValue(Arc),
    #[error("Laurent polynomial division is not exact")]
    NonExactDivision,
    #[error("Laurent polynomials over different variable lists")]
    MismatchedVariables,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(Arc),
    #[error("variable {0} appears with a negative exponent and cannot be set to zero")]
    ZeroSubstitution(Arc),
    #[error("triangulation is not a fan")]
    NotFan,
    #[error("vertex {vertex} out of range 1..={size}")]
    BadVertex { vertex: usize, size: usize },
    #[error("unknown quiver name {0:?}")]
    UnknownName(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
