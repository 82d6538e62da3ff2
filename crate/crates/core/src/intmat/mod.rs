//! Dense exact integer matrices.
//!
//! Everything here is generic over [`IntScalar`]; the crate root exposes
//! [`IntMatrix`](crate::IntMatrix) as the arbitrary-precision instance used by
//! the rest of the library.

mod lattice;
mod snf;

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::scalar::IntScalar;

pub use lattice::lattice_contains;
pub use snf::{smith_normal_form, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("rows have differing lengths (row {row} has {len} entries, expected {expected})")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero matrix has no normal decomposition")]
    ZeroMatrix,
}

/// Row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        if data.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let expected = rows.first().map(Vec::len).ok_or(MatrixError::Empty)?;
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * expected);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != expected {
                return Err(MatrixError::Ragged { row, len: r.len(), expected });
            }
            data.extend(r);
        }
        Self::new(nrows, expected, data)
    }

    /// Convenience constructor from small literals.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&v| from_i64::<T>(v)).collect()).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self.get(i, k).clone() * rhs.get(k, j).clone())
        }))
    }

    /// `M·v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect())
    }

    /// `v·M` for a row vector `v`.
    pub fn vec_mul(&self, v: &[T]) -> Result<Vec<T>, MatrixError> {
        if v.len() != self.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "row vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        Ok((0..self.cols)
            .map(|j| (0..self.rows).fold(T::zero(), |acc, i| acc + v[i].clone() * self.get(i, j).clone()))
            .collect())
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Submatrix obtained by deleting row `i` and column `j`.
    pub fn minor_matrix(&self, i: usize, j: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.select(&rows, &cols)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for j in 0..self.cols {
            let v = self.get(source, j).clone() * factor.clone();
            let idx = target * self.cols + j;
            self.data[idx] = self.data[idx].clone() + v;
        }
    }

    /// col[target] += factor * col[source]
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for i in 0..self.rows {
            let v = self.get(i, source).clone() * factor.clone();
            let idx = i * self.cols + target;
            self.data[idx] = self.data[idx].clone() + v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -self.data[idx].clone();
        }
    }

    /// Replace rows `(i, j)` by `(a·ri + b·rj, c·ri + d·rj)`.
    pub(crate) fn combine_rows(&mut self, i: usize, j: usize, [a, b, c, d]: [&T; 4]) {
        for k in 0..self.cols {
            let (x, y) = (self.get(i, k).clone(), self.get(j, k).clone());
            self.set(i, k, a.clone() * x.clone() + b.clone() * y.clone());
            self.set(j, k, c.clone() * x + d.clone() * y);
        }
    }

    /// Replace columns `(i, j)` by `(a·ci + c·cj, b·ci + d·cj)`, i.e. right
    /// multiplication by `[[a, b], [c, d]]` on those two columns.
    pub(crate) fn combine_cols(&mut self, i: usize, j: usize, [a, b, c, d]: [&T; 4]) {
        for k in 0..self.rows {
            let (x, y) = (self.get(k, i).clone(), self.get(k, j).clone());
            self.set(k, i, x.clone() * a.clone() + y.clone() * c.clone());
            self.set(k, j, x * b.clone() + y * d.clone());
        }
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n.saturating_sub(1) {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j).clone() * pivot.clone() - m.get(i, k).clone() * m.get(k, j).clone())
                        / prev.clone();
                    m.set(i, j, v);
                }
                m.set(i, k, T::zero());
            }
            prev = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if negate { -det } else { det })
    }

    /// Transposed matrix of signed cofactors: `h_{i,j} = (-1)^{i+j} det(M_{j,i})`.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor_matrix(j, i).determinant()?;
                out.set(i, j, if (i + j) % 2 == 0 { minor } else { -minor });
            }
        }
        Ok(out)
    }

    /// Non-negative gcd of all `t×t` minors; 1 for `t <= 0` and 0 when `t`
    /// exceeds both dimensions' minimum.
    pub fn minors_gcd(&self, t: isize) -> T {
        if t <= 0 {
            return T::one();
        }
        let t = t as usize;
        if t > self.rows.min(self.cols) {
            return T::zero();
        }
        let mut g = T::zero();
        for rows in combinations(self.rows, t) {
            for cols in combinations(self.cols, t) {
                let det = self.select(&rows, &cols).determinant().expect("selected minor is square");
                g = g.gcd(&det);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }
}

impl<T: IntScalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn from_i64<T: IntScalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type must represent every i64")
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
