use crate::error::{Error, Result};
use crate::fuzmat::FuzzyMatrix;

/// A reflexive and transitive square matrix.
///
/// Construction records the first-occurrence indices of its pairwise distinct
/// rows; their count is `d(Q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiOrderMatrix {
    matrix: FuzzyMatrix,
    distinct_rows: Vec<usize>,
}

impl QuasiOrderMatrix {
    pub fn new(matrix: FuzzyMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if let Some(index) = matrix.reflexivity_violation() {
            return Err(Error::NotReflexive { index });
        }
        if let Some((row, col)) = matrix.transitivity_violation()? {
            return Err(Error::NotTransitive { row, col });
        }
        let distinct_rows = first_occurrences(matrix.rows(), |i, j| matrix.rows_eq(i, j));
        Ok(QuasiOrderMatrix {
            matrix,
            distinct_rows,
        })
    }

    pub fn matrix(&self) -> &FuzzyMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> FuzzyMatrix {
        self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of pairwise distinct rows.
    pub fn d(&self) -> usize {
        self.distinct_rows.len()
    }

    /// Smallest indices of the pairwise distinct rows, ascending.
    pub fn distinct_row_indices(&self) -> &[usize] {
        &self.distinct_rows
    }

    /// Smallest indices of the pairwise distinct columns, ascending.
    pub fn distinct_column_indices(&self) -> Vec<usize> {
        first_occurrences(self.matrix.cols(), |i, j| self.matrix.cols_eq(i, j))
    }

    /// `(Q_r, Q_c)`: the distinct rows stacked (`d x n`) and the columns with the
    /// same indices (`n x d`). Fails if `Q_c . Q_r` does not give back `Q`.
    pub fn rows_cols(&self) -> Result<(FuzzyMatrix, FuzzyMatrix)> {
        let q_r = self.matrix.select_rows(&self.distinct_rows);
        let q_c = self.matrix.select_cols(&self.distinct_rows);
        if !q_c.mul(&q_r)?.approx_eq(&self.matrix)? {
            return Err(Error::Internal(
                "quasi-order does not factor as Q_c . Q_r".into(),
            ));
        }
        Ok((q_r, q_c))
    }
}

fn first_occurrences(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        if !reps.iter().any(|&r| same(r, i)) {
            reps.push(i);
        }
    }
    reps
}
