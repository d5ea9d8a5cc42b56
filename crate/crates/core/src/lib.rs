//! State reduction of fuzzy finite automata over complete residuated lattices.
//!
//! The crate computes descending sequences of fuzzy quasi-order matrices
//! (right/left invariant and weakly right/left invariant) and collapses an
//! automaton onto the distinct rows of the `k`-th member. The result agrees
//! with the original automaton on every word of length at most `k`, and on
//! every word once the sequence has stabilized.
//!
//! ```
//! use latred_core::{random, reduce, LatticeSpec, Method, ReduceOptions};
//! use rand::SeedableRng;
//!
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let a = random::random_automaton(&mut rng, LatticeSpec::godel(), 5, 2, 4);
//! let out = reduce(&a, Method::Ri, 2, &ReduceOptions::default()).unwrap();
//! assert!(out.automaton.states() <= a.states());
//! ```

pub mod automaton;
pub mod error;
pub mod fuzmat;
pub mod lattice;
pub mod random;
pub mod reduction;

pub use automaton::{Equivalence, FuzzyAutomaton, Word, DEFAULT_PATH_CAP, DEFAULT_WORD_CAP};
pub use error::{Error, Result};
pub use fuzmat::{Factorization, FuzzyMatrix, FuzzyVector, QuasiOrderMatrix};
pub use lattice::{LatticeKind, LatticeSpec, Value};
pub use reduction::{
    greatest_invariant, invariant_sequence, li_sequence, reduce, ri_sequence, weak_invariant,
    wli_matrix, wri_matrix, Direction, InvariantSequence, Method, ReduceOptions, Reduction,
    ReductionReport,
};
