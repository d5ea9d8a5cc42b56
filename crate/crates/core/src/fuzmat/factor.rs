use crate::error::{Error, Result};
use crate::fuzmat::{FuzzyMatrix, QuasiOrderMatrix};

/// An `r`-factorization `M = L . R` with `L: n x r` and `R: r x m`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    left: FuzzyMatrix,
    right: FuzzyMatrix,
}

impl Factorization {
    pub fn new(left: FuzzyMatrix, right: FuzzyMatrix) -> Result<Self> {
        if left.lattice() != right.lattice() {
            return Err(Error::LatticeMismatch {
                op: "factorization",
                left: left.lattice(),
                right: right.lattice(),
            });
        }
        if left.cols() != right.rows() {
            return Err(Error::DimensionMismatch {
                op: "factorization",
                left: left.shape(),
                right: right.shape(),
            });
        }
        Ok(Factorization { left, right })
    }

    /// Greedy factorization of a quasi-order, starting from `(Q_c, Q_r)`.
    ///
    /// The product always equals `Q` and the inner dimension never exceeds `d(Q)`.
    pub fn of_quasi_order(q: &QuasiOrderMatrix) -> Result<Self> {
        let (q_r, q_c) = q.rows_cols()?;
        let mut f = Factorization::new(q_c, q_r)?;
        f.remove_redundant_rows();
        Ok(f)
    }

    pub fn left(&self) -> &FuzzyMatrix {
        &self.left
    }

    pub fn right(&self) -> &FuzzyMatrix {
        &self.right
    }

    pub fn rank(&self) -> usize {
        self.left.cols()
    }

    pub fn product(&self) -> FuzzyMatrix {
        self.left
            .mul(&self.right)
            .expect("factor shapes checked at construction")
    }

    pub fn into_parts(self) -> (FuzzyMatrix, FuzzyMatrix) {
        (self.left, self.right)
    }

    /// Drops rows of `R` that are joins of scaled copies of the other rows,
    /// folding their coefficients into `L`, until no row is removable.
    ///
    /// Rows are scanned in ascending order and the scan restarts after every
    /// removal, so the result is deterministic.
    pub fn remove_redundant_rows(&mut self) {
        'scan: loop {
            let r = self.right.rows();
            if r <= 1 {
                return;
            }
            for i in 0..r {
                if let Some(coeffs) = self.combination_for(i) {
                    self.fold_row(i, &coeffs);
                    continue 'scan;
                }
            }
            return;
        }
    }

    /// Coefficients `c_j` (with `c_i = 0`) such that `V_{j != i} c_j (x) R_j = R_i`,
    /// taking each `c_j` as the largest possible scalar `/\_t R_j(t) -> R_i(t)`.
    fn combination_for(&self, i: usize) -> Option<Vec<f64>> {
        let l = self.right.lattice();
        let target = self.right.row(i);
        let mut coeffs = vec![0.0; self.right.rows()];
        let mut span = vec![0.0; target.len()];
        for (j, c) in coeffs.iter_mut().enumerate() {
            if j == i {
                continue;
            }
            let row = self.right.row(j);
            *c = row
                .iter()
                .zip(target)
                .fold(1.0, |acc, (&a, &b)| l.meet(acc, l.residuum(a, b)));
            for (s, &a) in span.iter_mut().zip(row) {
                *s = l.join(*s, l.tensor(*c, a));
            }
        }
        span.iter()
            .zip(target)
            .all(|(&a, &b)| l.value_eq(a, b))
            .then_some(coeffs)
    }

    fn fold_row(&mut self, i: usize, coeffs: &[f64]) {
        let l = self.left.lattice();
        let keep: Vec<usize> = (0..self.right.rows()).filter(|&j| j != i).collect();
        let mut left = self.left.select_cols(&keep);
        let n = left.rows();
        let mut data = Vec::with_capacity(n * keep.len());
        for s in 0..n {
            let li = self.left.get(s, i);
            for (col, &j) in keep.iter().enumerate() {
                data.push(l.join(left.get(s, col), l.tensor(li, coeffs[j])));
            }
        }
        left = FuzzyMatrix::from_raw(l, n, keep.len(), data);
        self.right = self.right.select_rows(&keep);
        self.left = left;
    }
}
