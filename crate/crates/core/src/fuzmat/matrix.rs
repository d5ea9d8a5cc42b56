use std::fmt;

use crate::error::{Error, Result};
use crate::fuzmat::FuzzyVector;
use crate::lattice::{LatticeSpec, Value};

/// Dense row-major matrix of degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyMatrix {
    lattice: LatticeSpec,
    rows: usize,
    cols: usize,
    data: Vec<Value>,
}

impl FuzzyMatrix {
    pub fn new(lattice: LatticeSpec, rows: usize, cols: usize, data: Vec<Value>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "matrix",
                left: (rows, cols),
                right: (1, data.len()),
            });
        }
        let data = data
            .into_iter()
            .map(|v| lattice.check(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(FuzzyMatrix {
            lattice,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from nested rows; all rows must have the same length.
    pub fn from_rows<R: AsRef<[Value]>>(lattice: LatticeSpec, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left: (rows.len(), cols),
                    right: (1, r.len()),
                });
            }
            data.extend_from_slice(r);
        }
        Self::new(lattice, rows.len(), cols, data)
    }

    pub(crate) fn from_raw(
        lattice: LatticeSpec,
        rows: usize,
        cols: usize,
        data: Vec<Value>,
    ) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        FuzzyMatrix {
            lattice,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(lattice: LatticeSpec, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Ok(Self::from_raw(lattice, n, n, data))
    }

    pub fn constant(lattice: LatticeSpec, rows: usize, cols: usize, value: Value) -> Result<Self> {
        Self::new(lattice, rows, cols, vec![value; rows * cols])
    }

    pub fn lattice(&self) -> LatticeSpec {
        self.lattice
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Value {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Value] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Value> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Value>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> FuzzyMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend((0..self.rows).map(|i| self.get(i, j)));
        }
        Self::from_raw(self.lattice, self.cols, self.rows, data)
    }

    /// Stacks the given rows, in order.
    pub fn select_rows(&self, indices: &[usize]) -> FuzzyMatrix {
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            data.extend_from_slice(self.row(i));
        }
        Self::from_raw(self.lattice, indices.len(), self.cols, data)
    }

    /// Keeps the given columns, in order.
    pub fn select_cols(&self, indices: &[usize]) -> FuzzyMatrix {
        let mut data = Vec::with_capacity(indices.len() * self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            data.extend(indices.iter().map(|&j| row[j]));
        }
        Self::from_raw(self.lattice, self.rows, indices.len(), data)
    }

    fn same_lattice(&self, other: &FuzzyMatrix, op: &'static str) -> Result<()> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch {
                op,
                left: self.lattice,
                right: other.lattice,
            });
        }
        Ok(())
    }

    fn same_shape(&self, other: &FuzzyMatrix, op: &'static str) -> Result<()> {
        self.same_lattice(other, op)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// Max-tensor product `(M . N)(i, j) = V_s M(i, s) (x) N(s, j)`.
    pub fn mul(&self, other: &FuzzyMatrix) -> Result<FuzzyMatrix> {
        self.same_lattice(other, "mat_mul")?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let l = self.lattice;
        let mut data = vec![0.0; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut data[i * other.cols..(i + 1) * other.cols];
            for (s, &a) in self.row(i).iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                for (o, &b) in out.iter_mut().zip(other.row(s)) {
                    *o = l.join(*o, l.tensor(a, b));
                }
            }
        }
        Ok(Self::from_raw(l, self.rows, other.cols, data))
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, beta: &FuzzyVector) -> Result<FuzzyVector> {
        if self.lattice != beta.lattice() {
            return Err(Error::LatticeMismatch {
                op: "mat_vec_mul",
                left: self.lattice,
                right: beta.lattice(),
            });
        }
        if self.cols != beta.len() {
            return Err(Error::DimensionMismatch {
                op: "mat_vec_mul",
                left: self.shape(),
                right: (beta.len(), 1),
            });
        }
        let l = self.lattice;
        let out = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(beta.entries())
                    .fold(0.0, |acc, (&a, &b)| l.join(acc, l.tensor(a, b)))
            })
            .collect();
        Ok(FuzzyVector::from_raw(l, out))
    }

    /// The right residual `self \ n`, entry `(j, k) = /\_i self(i, j) -> n(i, k)`.
    ///
    /// It is the greatest `X` with `self . X <= n`.
    pub fn right_residual(&self, n: &FuzzyMatrix) -> Result<FuzzyMatrix> {
        self.same_lattice(n, "right_residual")?;
        if self.rows != n.rows {
            return Err(Error::DimensionMismatch {
                op: "right_residual",
                left: self.shape(),
                right: n.shape(),
            });
        }
        let l = self.lattice;
        let mut data = vec![1.0; self.cols * n.cols];
        for i in 0..self.rows {
            let n_row = n.row(i);
            for (j, &a) in self.row(i).iter().enumerate() {
                // 0 -> b = 1 in every supported lattice
                if a == 0.0 {
                    continue;
                }
                let out = &mut data[j * n.cols..(j + 1) * n.cols];
                for (o, &b) in out.iter_mut().zip(n_row) {
                    *o = l.meet(*o, l.residuum(a, b));
                }
            }
        }
        Ok(Self::from_raw(l, self.cols, n.cols, data))
    }

    /// The left residual `self / m`, entry `(i, j) = /\_k m(j, k) -> self(i, k)`.
    ///
    /// It is the greatest `X` with `X . m <= self`.
    pub fn left_residual(&self, m: &FuzzyMatrix) -> Result<FuzzyMatrix> {
        self.same_lattice(m, "left_residual")?;
        if self.cols != m.cols {
            return Err(Error::DimensionMismatch {
                op: "left_residual",
                left: self.shape(),
                right: m.shape(),
            });
        }
        let l = self.lattice;
        let mut data = Vec::with_capacity(self.rows * m.rows);
        for i in 0..self.rows {
            let n_row = self.row(i);
            for j in 0..m.rows {
                let v = m
                    .row(j)
                    .iter()
                    .zip(n_row)
                    .fold(1.0, |acc, (&a, &b)| l.meet(acc, l.residuum(a, b)));
                data.push(v);
            }
        }
        Ok(Self::from_raw(l, self.rows, m.rows, data))
    }

    /// Entrywise meet of two matrices.
    pub fn meet(&self, other: &FuzzyMatrix) -> Result<FuzzyMatrix> {
        self.same_shape(other, "meet")?;
        let l = self.lattice;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| l.meet(a, b))
            .collect();
        Ok(Self::from_raw(l, self.rows, self.cols, data))
    }

    /// Entrywise join of two matrices.
    pub fn join(&self, other: &FuzzyMatrix) -> Result<FuzzyMatrix> {
        self.same_shape(other, "join")?;
        let l = self.lattice;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| l.join(a, b))
            .collect();
        Ok(Self::from_raw(l, self.rows, self.cols, data))
    }

    /// Entrywise infimum of a nonempty family.
    pub fn infimum<'a, I>(family: I) -> Result<FuzzyMatrix>
    where
        I: IntoIterator<Item = &'a FuzzyMatrix>,
    {
        let mut iter = family.into_iter();
        let first = iter.next().ok_or(Error::EmptyFamily)?;
        let mut acc = first.clone();
        for m in iter {
            acc.meet_assign(m)?;
        }
        Ok(acc)
    }

    pub(crate) fn meet_assign(&mut self, other: &FuzzyMatrix) -> Result<()> {
        self.same_shape(other, "infimum")?;
        let l = self.lattice;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = l.meet(*a, b);
        }
        Ok(())
    }

    /// Entrywise order through the lattice tolerance.
    pub fn leq(&self, other: &FuzzyMatrix) -> Result<bool> {
        self.same_shape(other, "mat_leq")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .all(|(&a, &b)| self.lattice.leq(a, b)))
    }

    /// Entrywise equality through the lattice tolerance.
    pub fn approx_eq(&self, other: &FuzzyMatrix) -> Result<bool> {
        self.same_shape(other, "mat_eq")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .all(|(&a, &b)| self.lattice.value_eq(a, b)))
    }

    pub(crate) fn rows_eq(&self, i: usize, j: usize) -> bool {
        let l = self.lattice;
        self.row(i)
            .iter()
            .zip(self.row(j))
            .all(|(&a, &b)| l.value_eq(a, b))
    }

    pub(crate) fn cols_eq(&self, i: usize, j: usize) -> bool {
        let l = self.lattice;
        (0..self.rows).all(|r| l.value_eq(self.get(r, i), self.get(r, j)))
    }

    /// First diagonal entry below 1, if any.
    pub fn reflexivity_violation(&self) -> Option<usize> {
        let l = self.lattice;
        (0..self.rows.min(self.cols)).find(|&i| !l.leq(1.0, self.get(i, i)))
    }

    /// First entry where `M . M` exceeds `M`, if any.
    pub fn transitivity_violation(&self) -> Result<Option<(usize, usize)>> {
        let sq = self.mul(self)?;
        let l = self.lattice;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !l.leq(sq.get(i, j), self.get(i, j)) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Display for FuzzyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
