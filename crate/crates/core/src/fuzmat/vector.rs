use crate::error::{Error, Result};
use crate::fuzmat::FuzzyMatrix;
use crate::lattice::{LatticeSpec, Value};

/// A fuzzy subset of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyVector {
    lattice: LatticeSpec,
    entries: Vec<Value>,
}

impl FuzzyVector {
    pub fn new(lattice: LatticeSpec, entries: Vec<Value>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        let entries = entries
            .into_iter()
            .map(|v| lattice.check(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(FuzzyVector { lattice, entries })
    }

    pub(crate) fn from_raw(lattice: LatticeSpec, entries: Vec<Value>) -> Self {
        debug_assert!(!entries.is_empty());
        FuzzyVector { lattice, entries }
    }

    pub fn constant(lattice: LatticeSpec, n: usize, value: Value) -> Result<Self> {
        Self::new(lattice, vec![value; n])
    }

    pub fn lattice(&self) -> LatticeSpec {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Value {
        self.entries[i]
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    fn compatible(&self, other: &FuzzyVector, op: &'static str) -> Result<()> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch {
                op,
                left: self.lattice,
                right: other.lattice,
            });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                op,
                left: (1, self.len()),
                right: (1, other.len()),
            });
        }
        Ok(())
    }

    /// Row vector times matrix: `(a . M)(i) = V_s a(s) (x) M(s, i)`.
    pub fn mul_mat(&self, m: &FuzzyMatrix) -> Result<FuzzyVector> {
        if self.lattice != m.lattice() {
            return Err(Error::LatticeMismatch {
                op: "vec_mat_mul",
                left: self.lattice,
                right: m.lattice(),
            });
        }
        if self.len() != m.rows() {
            return Err(Error::DimensionMismatch {
                op: "vec_mat_mul",
                left: (1, self.len()),
                right: (m.rows(), m.cols()),
            });
        }
        let l = self.lattice;
        let mut out = vec![0.0; m.cols()];
        for (s, &a) in self.entries.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(m.row(s)) {
                *o = l.join(*o, l.tensor(a, b));
            }
        }
        Ok(FuzzyVector::from_raw(l, out))
    }

    /// Scalar product `V_s a(s) (x) b(s)`.
    pub fn dot(&self, other: &FuzzyVector) -> Result<Value> {
        self.compatible(other, "dot")?;
        let l = self.lattice;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(0.0, |acc, (&a, &b)| l.join(acc, l.tensor(a, b))))
    }

    /// The right residual `self \ beta`, entry `(i, j) = self(i) -> beta(j)`.
    pub fn right_residual(&self, beta: &FuzzyVector) -> Result<FuzzyMatrix> {
        self.compatible(beta, "right_residual_vec")?;
        let l = self.lattice;
        let n = self.len();
        let mut data = Vec::with_capacity(n * n);
        for &a in &self.entries {
            data.extend(beta.entries.iter().map(|&b| l.residuum(a, b)));
        }
        Ok(FuzzyMatrix::from_raw(l, n, n, data))
    }

    /// The left residual `self / alpha`, entry `(j, i) = alpha(i) -> self(j)`.
    pub fn left_residual(&self, alpha: &FuzzyVector) -> Result<FuzzyMatrix> {
        self.compatible(alpha, "left_residual_vec")?;
        let l = self.lattice;
        let n = self.len();
        let mut data = Vec::with_capacity(n * n);
        for &b in &self.entries {
            data.extend(alpha.entries.iter().map(|&a| l.residuum(a, b)));
        }
        Ok(FuzzyMatrix::from_raw(l, n, n, data))
    }

    /// Coordinatewise order through the lattice tolerance.
    pub fn leq(&self, other: &FuzzyVector) -> Result<bool> {
        self.compatible(other, "vec_leq")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(&a, &b)| self.lattice.leq(a, b)))
    }

    pub fn approx_eq(&self, other: &FuzzyVector) -> Result<bool> {
        self.compatible(other, "vec_eq")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(&a, &b)| self.lattice.value_eq(a, b)))
    }
}
