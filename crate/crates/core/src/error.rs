use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid monotone map {images:?} into ord {cod}: {reason}")]
    InvalidMap {
        images: Vec<usize>,
        cod: usize,
        reason: &'static str,
    },

    #[error("no right adjoint: {0}")]
    NoAdjoint(String),

    #[error("not a left bracketing function: {0:?}")]
    InvalidLbf(Vec<usize>),

    #[error("not a right bracketing function: {0:?}")]
    InvalidRbf(Vec<usize>),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("not a morphism {src} -> {dst} with map {map}")]
    NotAMorphism {
        src: String,
        dst: String,
        map: String,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("position {position} out of range 1..={arity}")]
    Position { position: usize, arity: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
