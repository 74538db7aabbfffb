//! Crate-wide error type.

use thiserror::Error;

use crate::pauli::MAX_QUBITS;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("empty Pauli string")]
    EmptyPauli,
    #[error("illegal character {ch:?} at position {pos} in Pauli string")]
    IllegalCharacter { ch: char, pos: usize },
    #[error("operator acts on {actual} qubits, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("{0} qubits exceeds the {MAX_QUBITS}-qubit limit")]
    TooManyQubits(usize),
    #[error("operator has an imaginary phase")]
    ImaginaryPhase,
    #[error("generators {0} and {1} anticommute")]
    NonCommuting(usize, usize),
    #[error("generated group contains -I")]
    ContainsMinusI,
    #[error("generator {0} is a signed product of earlier generators")]
    DependentGenerators(usize),
    #[error("generator {0} has an imaginary phase")]
    BadPhase(usize),
    #[error("no generators given")]
    NoGenerators,
    #[error("{what} guard exceeded: {requested} > {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    #[error("images do not form a bijection on the qubit slots")]
    InvalidPermutation,
    #[error("cannot parse cycle notation: {0}")]
    BadCycleNotation(String),
    #[error("point {0} outside 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("unknown letter permutation {0:?}")]
    BadLetterPerm(String),
    #[error("permutation is not a weak automorphism of the group")]
    NotWeak,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(&'static str),
    #[error("element list is not closed under composition")]
    ClosureViolation,
    #[error("empty operator set")]
    EmptySet,
    #[error("unknown catalog code {name:?}; available: {available}")]
    UnknownCode { name: String, available: String },
    #[error("cannot parse code file: {0}")]
    BadCodeFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
