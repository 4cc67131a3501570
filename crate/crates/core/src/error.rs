use thiserror::Error;

use crate::diagram::{CrossingId, ValidationReport};
use crate::moves::MoveError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unexpected token `{token}` at column {column}")]
    Lexical { token: String, column: usize },

    #[error("invalid diagram: {0}")]
    Invalid(ValidationReport),

    #[error("crossing {0} is singular")]
    SingularCrossing(CrossingId),

    #[error("unknown crossing {0}")]
    UnknownCrossing(CrossingId),

    #[error("expected a single-component diagram, found {0} components")]
    NotAKnot(usize),

    #[error("diagram is not compatible (component weights {0:?})")]
    NotCompatible(Vec<i64>),

    #[error("not a permutation of {len} components: {perm:?}")]
    BadPermutation { perm: Vec<usize>, len: usize },

    #[error("component {component} out of range (diagram has {count})")]
    BadComponent { component: usize, count: usize },

    #[error("cannot move the starting point {steps} steps along a component of length {len}")]
    BadSteps { steps: usize, len: usize },

    #[error("no term recorded for crossing {0}")]
    Provenance(CrossingId),

    #[error("collapse: {0}")]
    Collapse(String),

    #[error("malformed polynomial JSON: {0}")]
    Json(String),

    #[error(transparent)]
    Move(#[from] MoveError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
