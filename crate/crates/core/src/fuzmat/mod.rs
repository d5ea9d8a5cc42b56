//! Dense vector and matrix algebra over a [`LatticeSpec`](crate::lattice::LatticeSpec).
//!
//! Products are max-tensor (`V` of `(x)`), residuals are the greatest solutions
//! of one-sided inequations, and orderings are entrywise through the lattice
//! tolerance.

mod factor;
mod matrix;
mod quasi;
mod vector;

pub use factor::Factorization;
pub use matrix::FuzzyMatrix;
pub use quasi::QuasiOrderMatrix;
pub use vector::FuzzyVector;
