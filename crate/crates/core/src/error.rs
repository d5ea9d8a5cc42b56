use thiserror::Error;

use crate::lattice::LatticeSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the algebra, automaton and reduction layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {value} is not a valid {lattice} degree")]
    InvalidValue { value: f64, lattice: LatticeSpec },

    #[error("epsilon {epsilon} is invalid for the {kind} lattice")]
    InvalidEpsilon { kind: &'static str, epsilon: f64 },

    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op}: operands live over different lattices ({left} vs {right})")]
    LatticeMismatch {
        op: &'static str,
        left: LatticeSpec,
        right: LatticeSpec,
    },

    #[error("matrices and vectors must have at least one row and one column")]
    Empty,

    #[error("infimum of an empty family")]
    EmptyFamily,

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not reflexive: entry ({index}, {index}) is below 1")]
    NotReflexive { index: usize },

    #[error("matrix is not transitive: (M*M)({row}, {col}) exceeds M({row}, {col})")]
    NotTransitive { row: usize, col: usize },

    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("symbol {0:?} occurs twice in the alphabet")]
    DuplicateSymbol(String),

    #[error("unknown input symbol {0}")]
    UnknownSymbol(String),

    #[error("automata are over different alphabets")]
    AlphabetMismatch,

    #[error("word tree with {requested} nodes exceeds the cap of {cap}")]
    WordCapExceeded { requested: u128, cap: u64 },

    #[error("path enumeration of {requested} state sequences exceeds the cap of {cap}")]
    PathCapExceeded { requested: u128, cap: u64 },

    #[error("reduced automaton is not {k}-equivalent to the original (witness {word})")]
    EquivalenceCheckFailed { k: usize, word: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True when the failure signals a bug in this library rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::EquivalenceCheckFailed { .. } | Error::Internal(_)
        )
    }

    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::WordCapExceeded { .. } | Error::PathCapExceeded { .. }
        )
    }
}
