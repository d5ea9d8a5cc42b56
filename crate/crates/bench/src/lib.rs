//! Seeded workloads shared by the criterion benches.

use latred_core::random::{random_automaton, random_matrix, seeded};
use latred_core::{FuzzyAutomaton, FuzzyMatrix, LatticeKind, LatticeSpec};

/// Grid fine enough that random automata run every step before stabilizing.
pub const GRID: u32 = 16;

pub fn automaton(kind: LatticeKind, n: usize, m: usize, seed: u64) -> FuzzyAutomaton {
    let mut rng = seeded(seed);
    random_automaton(
        &mut rng,
        LatticeSpec::with_default_epsilon(kind),
        n,
        m,
        GRID,
    )
}

pub fn matrix_pair(kind: LatticeKind, n: usize, seed: u64) -> (FuzzyMatrix, FuzzyMatrix) {
    let mut rng = seeded(seed);
    let l = LatticeSpec::with_default_epsilon(kind);
    (
        random_matrix(&mut rng, l, n, n, GRID),
        random_matrix(&mut rng, l, n, n, GRID),
    )
}
