use thiserror::Error;

use crate::algebra::AmbientRing;

/// Errors raised by the algebraic and combinatorial routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: AmbientRing, right: AmbientRing },

    #[error("neuron count must be between 1 and {max}, got {got}")]
    NeuronCount { got: usize, max: usize },

    #[error("index {index} out of range for {n} neurons")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("index {0} appears in both sigma and tau")]
    OverlappingSupports(usize),

    #[error("y-variables are only available in the polarized ring")]
    NotPolarized,

    #[error("expected a polynomial in the polarized ring")]
    ExpectedPolarized,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("input contains no codewords")]
    NoCodewords,

    #[error("cannot parse expression {input:?}: {msg}")]
    Expression { input: String, msg: String },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("ideal is not flagged as canonical")]
    NotCanonical,

    #[error("monomial is not squarefree: {0}")]
    NotSquarefree(String),

    #[error("complex is not multigraded: {0}")]
    NotMultigraded(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid cover: {0}")]
    Cover(String),

    #[error("exponent overflow in monomial product")]
    ExponentOverflow,

    #[error("{got} generators exceed the supported maximum of {max}")]
    TooManyGenerators { got: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
