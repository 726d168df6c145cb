use thiserror::Error;

use crate::shapes::{Shape, Square};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidShape(Vec<usize>),

    #[error("the empty shape has no {0}")]
    EmptyShape(&'static str),

    #[error("{outer} does not cover {inner}")]
    NotCovering { outer: Shape, inner: Shape },

    #[error("{square} is not a removable square of ({shape})")]
    NotRemovable { shape: Shape, square: Square },

    #[error("{square} is not an addible square of ({shape})")]
    NotAddible { shape: Shape, square: Square },

    #[error("{square} is the lone square of ({shape}) and has no preimage")]
    LoneSquare { shape: Shape, square: Square },

    #[error("scheme `{scheme}` is not defined on shape ({shape})")]
    ShapeNotCovered { scheme: String, shape: Shape },

    #[error("invalid scheme table: {}", .0.join("; "))]
    InvalidTable(Vec<String>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("placing {value} at {square} breaks row/column monotonicity")]
    Monotonicity { square: Square, value: u32 },

    #[error("entry {0} is already present")]
    DuplicateEntry(u32),

    #[error("entries must be positive integers")]
    ZeroEntry,

    #[error("the tableau is empty")]
    EmptyTableau,

    #[error("size {size} exceeds the exhaustive bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("tableau pair is not in the image of the correspondence: {0}")]
    InconsistentPair(String),
}
