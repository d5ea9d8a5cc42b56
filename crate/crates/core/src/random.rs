//! Seeded random automata with grid-valued degrees.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::FuzzyAutomaton;
use crate::fuzmat::{FuzzyMatrix, FuzzyVector};
use crate::lattice::{LatticeKind, LatticeSpec, Value};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A value from `{0, 1/grid, .., 1}`; Boolean lattices always draw from `{0, 1}`.
pub fn grid_value<R: Rng + ?Sized>(rng: &mut R, lattice: LatticeSpec, grid: u32) -> Value {
    let grid = if lattice.kind() == LatticeKind::Boolean {
        1
    } else {
        grid.max(1)
    };
    rng.gen_range(0..=grid) as f64 / grid as f64
}

/// Letter names `a, b, ..` (or `x26, x27, ..` past the Latin alphabet).
pub fn alphabet(m: usize) -> Vec<String> {
    (0..m)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

pub fn random_vector<R: Rng + ?Sized>(
    rng: &mut R,
    lattice: LatticeSpec,
    n: usize,
    grid: u32,
) -> FuzzyVector {
    let entries = (0..n).map(|_| grid_value(rng, lattice, grid)).collect();
    FuzzyVector::new(lattice, entries).expect("grid values are valid degrees")
}

pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    lattice: LatticeSpec,
    rows: usize,
    cols: usize,
    grid: u32,
) -> FuzzyMatrix {
    let data = (0..rows * cols)
        .map(|_| grid_value(rng, lattice, grid))
        .collect();
    FuzzyMatrix::new(lattice, rows, cols, data).expect("grid values are valid degrees")
}

/// An `n`-state automaton over `m` letters with every degree drawn from the grid.
///
/// Panics if `n` or `m` is zero.
pub fn random_automaton<R: Rng + ?Sized>(
    rng: &mut R,
    lattice: LatticeSpec,
    n: usize,
    m: usize,
    grid: u32,
) -> FuzzyAutomaton {
    assert!(n > 0 && m > 0, "automaton needs states and letters");
    let sigma = random_vector(rng, lattice, n, grid);
    let delta = (0..m)
        .map(|_| random_matrix(rng, lattice, n, n, grid))
        .collect();
    let tau = random_vector(rng, lattice, n, grid);
    FuzzyAutomaton::new(alphabet(m), sigma, delta, tau).expect("shapes agree by construction")
}
