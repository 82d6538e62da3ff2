//! Positive critical binomial matrices and the objects read off them.

mod analysis;
mod binomial;
mod normal_form;
mod relations;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::IntMatrix;

pub use analysis::{ComponentCounts, PcbAnalysis};
pub use binomial::{format_monomial, Binomial};
pub use normal_form::TorsionProfile;
pub use relations::grading_degree;

/// Row and column indices in these errors are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PcbError {
    #[error("NonSquare: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("TooSmall: a PCB matrix needs n >= 2, got n = {0}")]
    TooSmall(usize),
    #[error("DiagonalSignError({0}): diagonal entry {0} must be positive")]
    DiagonalSignError(usize),
    #[error("NonPositiveOffDiagonal({0},{1}): entry ({0},{1}) must be strictly negative")]
    NonPositiveOffDiagonal(usize, usize),
    #[error("RowSumNonzero({0}): row {0} sums to {1}")]
    RowSumNonzero(usize, BigInt),
    #[error("EntryTooLarge({0},{1}): magnitude does not fit in 32 bits")]
    EntryTooLarge(usize, usize),
    #[error("NegativeEntry({0},{1}): syzygy exponent b({0}) is negative at position {1}")]
    NegativeEntry(usize, usize),
    #[error("DimensionTooSmall: needs n >= {needed}, got n = {n}")]
    DimensionTooSmall { n: usize, needed: usize },
    #[error("NotApplicable: {0}")]
    NotApplicable(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
}

/// A validated PCB matrix: `L` has diagonal `a_ii > 0`, off-diagonal
/// `-a_ij < 0`, and zero row sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcbMatrix {
    n: usize,
    a: Vec<Vec<u32>>,
    signed: IntMatrix,
}

impl PcbMatrix {
    /// Validates a signed matrix given row by row.
    pub fn validate(raw: &[Vec<BigInt>]) -> Result<Self, PcbError> {
        let n = raw.len();
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(PcbError::NonSquare { row: i + 1, len: row.len(), expected: n });
            }
        }
        if n < 2 {
            return Err(PcbError::TooSmall(n));
        }
        let mut a = vec![vec![0u32; n]; n];
        for (i, row) in raw.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i == j && !v.is_positive() {
                    return Err(PcbError::DiagonalSignError(i + 1));
                }
                if i != j && !v.is_negative() {
                    return Err(PcbError::NonPositiveOffDiagonal(i + 1, j + 1));
                }
                a[i][j] = v.abs().to_u32().ok_or(PcbError::EntryTooLarge(i + 1, j + 1))?;
            }
            let sum: BigInt = row.iter().sum();
            if !sum.is_zero() {
                return Err(PcbError::RowSumNonzero(i + 1, sum));
            }
        }
        let signed = IntMatrix::from_rows(raw.to_vec()).expect("square and nonempty");
        Ok(Self { n, a, signed })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, PcbError> {
        let raw: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect()).collect();
        Self::validate(&raw)
    }

    /// Builds from the off-diagonal magnitudes; the diagonal is filled in
    /// from the row sums.
    pub fn from_off_diagonal(off: &[Vec<u32>]) -> Result<Self, PcbError> {
        let n = off.len();
        let raw: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let diag: u64 = (0..n).filter(|&j| j != i).map(|j| off[i][j] as u64).sum();
                (0..n).map(|j| if i == j { BigInt::from(diag) } else { -BigInt::from(off[i][j]) }).collect()
            })
            .collect();
        Self::validate(&raw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_ij` (0-based indices).
    pub fn a(&self, i: usize, j: usize) -> u32 {
        self.a[i][j]
    }

    pub fn magnitudes(&self) -> &[Vec<u32>] {
        &self.a
    }

    /// The signed matrix `L`.
    pub fn signed(&self) -> &IntMatrix {
        &self.signed
    }

    /// `f_j = x_j^{a_jj} - ∏_{i≠j} x_i^{a_ij}`, one per column.
    pub fn generators(&self) -> Vec<Binomial> {
        (0..self.n)
            .map(|j| {
                let mut plus = vec![0; self.n];
                plus[j] = self.a[j][j];
                let minus = (0..self.n).map(|i| if i == j { 0 } else { self.a[i][j] }).collect();
                Binomial::new(plus, minus)
            })
            .collect()
    }

    /// `(m, d, ν)`: the last row of `adj(L)`, its gcd, and `m / d`.
    ///
    /// # Panics
    /// If an entry of `m` is not positive, which cannot happen for a valid
    /// matrix.
    pub fn associated_vector(&self) -> (Vec<BigInt>, BigInt, Vec<BigInt>) {
        let adj = self.signed.adjugate().expect("square");
        let m: Vec<BigInt> = adj.row(self.n - 1).to_vec();
        assert!(m.iter().all(Signed::is_positive), "associated vector {m:?} is not positive");
        let d = m.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        let nu = m.iter().map(|v| v / &d).collect();
        (m, d, nu)
    }

    /// `ν` as machine weights, or `None` if an entry exceeds `u64`.
    pub fn weights(&self) -> Option<Vec<u64>> {
        self.associated_vector().2.iter().map(ToPrimitive::to_u64).collect()
    }
}
