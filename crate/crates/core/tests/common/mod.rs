//! The six-state Boolean automaton over `{x, y}` used as a golden fixture,
//! together with the matrices its reduction sequences must produce.
#![allow(dead_code)]

use latred_core::{FuzzyAutomaton, FuzzyMatrix, FuzzyVector, LatticeSpec};

pub type Grid = [[u8; 6]; 6];

pub const SIGMA: [u8; 6] = [1, 1, 0, 0, 0, 1];
pub const TAU: [u8; 6] = [1, 1, 0, 1, 0, 1];

pub const DELTA_X: Grid = [
    [1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [1, 0, 1, 1, 0, 0],
    [0, 1, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1],
];

pub const DELTA_Y: Grid = [
    [1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 1, 0, 0],
    [1, 0, 1, 1, 0, 0],
];

pub const Q: [Grid; 4] = [
    [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
    ],
];
pub const Q_D: [usize; 4] = [2, 3, 4, 5];

pub const Q_HAT: [Grid; 2] = [
    [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 1],
    ],
];
pub const Q_HAT_D: [usize; 2] = [2, 3];

pub const P: [Grid; 3] = [
    [
        [1, 1, 0, 0, 0, 1],
        [1, 1, 0, 0, 0, 1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 0, 0, 0, 1],
    ],
    [
        [1, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 1, 1, 1, 0, 0],
        [1, 0, 1, 0, 1, 1],
        [1, 0, 0, 0, 0, 1],
    ],
    [
        [1, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 1, 0, 0],
        [1, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 1],
    ],
];
pub const P_D: [usize; 3] = [2, 6, 6];

// the weakly left invariant matrices coincide with P_0, P_1, P_2
pub const P_HAT: [Grid; 3] = P;
pub const P_HAT_D: [usize; 3] = [2, 6, 6];

pub fn matrix(g: &Grid) -> FuzzyMatrix {
    let rows: Vec<Vec<f64>> = g
        .iter()
        .map(|r| r.iter().map(|&v| v as f64).collect())
        .collect();
    FuzzyMatrix::from_rows(LatticeSpec::boolean(), &rows).unwrap()
}

pub fn vector(v: &[u8; 6]) -> FuzzyVector {
    FuzzyVector::new(
        LatticeSpec::boolean(),
        v.iter().map(|&x| x as f64).collect(),
    )
    .unwrap()
}

pub fn example_automaton() -> FuzzyAutomaton {
    FuzzyAutomaton::new(
        vec!["x".into(), "y".into()],
        vector(&SIGMA),
        vec![matrix(&DELTA_X), matrix(&DELTA_Y)],
        vector(&TAU),
    )
    .unwrap()
}
