use super::{Matrix, MatrixError};
use crate::scalar::{ext_gcd, IntScalar};

/// A normal decomposition `P·M·Q = D`.
#[derive(Clone, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub p: Matrix<T>,
    pub d: Matrix<T>,
    pub q: Matrix<T>,
    /// Nonzero diagonal of `D`, each dividing the next.
    pub invariant_factors: Vec<T>,
}

impl<T: std::fmt::Display + std::fmt::Debug> std::fmt::Debug for SnfResult<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SnfResult")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("q", &self.q)
            .field("invariant_factors", &self.invariant_factors)
            .finish()
    }
}

impl<T: IntScalar> SnfResult<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Checks every structural property against the source matrix.
    pub fn check(&self, source: &Matrix<T>) -> Result<(), String> {
        let plq = &(&self.p * source) * &self.q;
        if plq != self.d {
            return Err(format!("P·M·Q = {plq:?} differs from D = {:?}", self.d));
        }
        for (name, u) in [("P", &self.p), ("Q", &self.q)] {
            let det = u.determinant().map_err(|e| e.to_string())?;
            if !det.abs().is_one() {
                return Err(format!("det {name} = {det}, not a unit"));
            }
        }
        let r = self.rank();
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                let v = self.d.get(i, j);
                let expected_zero = i != j || i >= r;
                if expected_zero && !v.is_zero() {
                    return Err(format!("D[{i}][{j}] = {v} should be zero"));
                }
                if !expected_zero && *v != self.invariant_factors[i] {
                    return Err(format!("D[{i}][{i}] disagrees with invariant factor {i}"));
                }
            }
        }
        for w in self.invariant_factors.windows(2) {
            if !w[0].is_positive() || !w[1].is_multiple_of(&w[0]) {
                return Err(format!("divisibility chain broken at {} | {}", w[0], w[1]));
            }
        }
        if let Some(first) = self.invariant_factors.first() {
            if !first.is_positive() {
                return Err(format!("invariant factor {first} is not positive"));
            }
        }
        Ok(())
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivot rule: the nonzero entry of least absolute value in the active
/// submatrix, ties going to the lexicographically lowest `(row, col)`.
/// Negative pivots are fixed by negating the pivot row (and the matching row of
/// `P`). The divisibility chain is enforced afterwards by gcd absorption between
/// diagonal pairs.
pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> Result<SnfResult<T>, MatrixError> {
    if m.is_zero() {
        return Err(MatrixError::ZeroMatrix);
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut p = Matrix::identity(rows);
    let mut q = Matrix::identity(cols);
    let mut rank = 0;

    for k in 0..rows.min(cols) {
        while let Some((pr, pc)) = min_pivot(&a, k) {
            a.swap_rows(k, pr);
            p.swap_rows(k, pr);
            a.swap_cols(k, pc);
            q.swap_cols(k, pc);

            let pivot = a.get(k, k).clone();
            let mut clean = true;
            for i in k + 1..rows {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let quot = -(a.get(i, k).clone() / pivot.clone());
                a.add_row_multiple(i, k, &quot);
                p.add_row_multiple(i, k, &quot);
                clean &= a.get(i, k).is_zero();
            }
            for j in k + 1..cols {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let quot = -(a.get(k, j).clone() / pivot.clone());
                a.add_col_multiple(j, k, &quot);
                q.add_col_multiple(j, k, &quot);
                clean &= a.get(k, j).is_zero();
            }
            if clean {
                break;
            }
        }
        if a.get(k, k).is_zero() {
            break;
        }
        if a.get(k, k).is_negative() {
            a.negate_row(k);
            p.negate_row(k);
        }
        rank = k + 1;
    }

    for i in 0..rank {
        for j in i + 1..rank {
            let (x, y) = (a.get(i, i).clone(), a.get(j, j).clone());
            if y.is_multiple_of(&x) {
                continue;
            }
            // [[s, t], [-y/g, x/g]] · diag(x, y) · [[1, -t·y/g], [1, s·x/g]] = diag(g, x·y/g)
            let (g, s, t) = ext_gcd(&x, &y);
            let (xg, yg) = (x / g.clone(), y / g);
            let neg_yg = -yg.clone();
            a.combine_rows(i, j, [&s, &t, &neg_yg, &xg]);
            p.combine_rows(i, j, [&s, &t, &neg_yg, &xg]);
            let one = T::one();
            let b12 = -(t * yg);
            let b22 = s * xg;
            a.combine_cols(i, j, [&one, &b12, &one, &b22]);
            q.combine_cols(i, j, [&one, &b12, &one, &b22]);
        }
    }

    let invariant_factors = (0..rank).map(|i| a.get(i, i).clone()).collect();
    Ok(SnfResult { p, d: a, q, invariant_factors })
}

fn min_pivot<T: IntScalar>(a: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(b, _, _)| mag < *b) {
                best = Some((mag, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    type M = Matrix<BigInt>;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ratio_factors(m: &M, rank: usize) -> Vec<BigInt> {
        (1..=rank as isize).map(|t| m.minors_gcd(t) / m.minors_gcd(t - 1)).collect()
    }

    #[test]
    fn simplest_pcb_matrix() {
        let m = M::from_i64_rows(&[[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]).unwrap();
        let snf = smith_normal_form(&m).unwrap();
        snf.check(&m).unwrap();
        assert_eq!(snf.invariant_factors, big(&[1, 4, 4]));
        let diag: Vec<BigInt> = (0..4).map(|i| snf.d.get(i, i).clone()).collect();
        assert_eq!(diag, big(&[1, 4, 4, 0]));
        assert_eq!(snf.invariant_factors, ratio_factors(&m, 3));
    }

    #[test]
    fn two_by_two_pcb() {
        for (a, b) in [(6, 4), (3, 3), (5, 7), (12, 18)] {
            let m = M::from_i64_rows(&[[a, -a], [-b, b]]).unwrap();
            let snf = smith_normal_form(&m).unwrap();
            snf.check(&m).unwrap();
            let g = num_integer::gcd(a, b);
            assert_eq!(snf.invariant_factors, big(&[g]));
            assert!(snf.d.get(1, 1).is_zero());
        }
    }

    #[test]
    fn identity_is_fixed() {
        let id = M::identity(4);
        let snf = smith_normal_form(&id).unwrap();
        assert_eq!(snf.d, id);
        assert_eq!(snf.p, id);
        assert_eq!(snf.q, id);
    }

    #[test]
    fn zero_matrix_rejected() {
        assert_eq!(smith_normal_form(&M::zeros(2, 3)), Err(MatrixError::ZeroMatrix));
    }

    #[test]
    fn rectangular_and_chain_repair() {
        // diag(2, 3) needs gcd absorption to become diag(1, 6)
        let m = M::from_i64_rows(&[[2, 0, 0], [0, 3, 0]]).unwrap();
        let snf = smith_normal_form(&m).unwrap();
        snf.check(&m).unwrap();
        assert_eq!(snf.invariant_factors, big(&[1, 6]));

        let tall = M::from_i64_rows(&[[4, 6], [6, 9], [2, 8]]).unwrap();
        let snf = smith_normal_form(&tall).unwrap();
        snf.check(&tall).unwrap();
        assert_eq!(snf.invariant_factors, ratio_factors(&tall, 2));
    }

    #[test]
    fn deterministic() {
        let m = M::from_i64_rows(&[[4, -2, -1, -1], [-1, 4, -2, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]).unwrap();
        assert_eq!(smith_normal_form(&m).unwrap(), smith_normal_form(&m).unwrap());
    }
}
