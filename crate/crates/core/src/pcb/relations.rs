use num_bigint::BigInt;

use super::{Binomial, PcbError, PcbMatrix};
use crate::poly::{Rationals, SparsePolynomial};

/// `Σ ν_i e_i`.
pub fn grading_degree(nu: &[BigInt], e: &[u32]) -> Result<BigInt, PcbError> {
    if nu.len() != e.len() {
        return Err(PcbError::DimensionMismatch(format!("{} weights against {} exponents", nu.len(), e.len())));
    }
    Ok(nu.iter().zip(e).map(|(w, &k)| w * k).sum())
}

impl PcbMatrix {
    /// The exponent vectors `b(1), …, b(n)` of the relation
    /// `Σ x^{b(i)} f_i = 0`.
    pub fn syzygy_vectors(&self) -> Result<Vec<Vec<u32>>, PcbError> {
        let n = self.n;
        // 1-based accessor to keep the index ranges readable
        let a = |i: usize, j: usize| self.a[i - 1][j - 1] as i64;
        let row_tail = |j: usize, from: usize, to: usize| (from..=to).map(|k| a(j, k)).sum::<i64>();
        (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        let v = if i < n {
                            if j == i || j == i + 1 {
                                0
                            } else if j < i {
                                a(j, j) - row_tail(j, j + 1, i)
                            } else {
                                a(j, j) - row_tail(j, j + 1, n) - row_tail(j, 1, i)
                            }
                        } else if j == 1 || j == n {
                            0
                        } else {
                            a(j, j) - row_tail(j, j + 1, n)
                        };
                        u32::try_from(v).map_err(|_| PcbError::NegativeEntry(i, j))
                    })
                    .collect()
            })
            .collect()
    }

    /// The binomial `g ∈ (I : x_1) \ I` for `n ≥ 4`.
    pub fn mixedness_witness(&self) -> Result<Binomial, PcbError> {
        let (shift, g1) = self.witness_cofactors()?;
        let n = self.n;
        let mut plus = vec![0; n];
        plus[0] = self.a[0][0] - 1;
        plus[n - 1] = shift;
        let mut minus = vec![0; n];
        minus[0] = self.a[0][n - 1] - 1;
        for i in 1..n - 1 {
            minus[i] = g1[i] + self.a[i][n - 1];
        }
        Ok(Binomial::new(plus, minus))
    }

    /// `(a_nn - a_n1, exponent of g1)` with `x_1·g = x_n^{a_nn - a_n1}·f_1 + g1·f_n`.
    pub fn witness_cofactors(&self) -> Result<(u32, Vec<u32>), PcbError> {
        let n = self.n;
        if n < 4 {
            return Err(PcbError::DimensionTooSmall { n, needed: 4 });
        }
        let shift = self.a[n - 1][n - 1] - self.a[n - 1][0];
        let g1 = (0..n).map(|i| if i == 0 || i == n - 1 { 0 } else { self.a[i][0] }).collect();
        Ok((shift, g1))
    }

    /// Expands `Σ x^{b(i)} f_i` and checks that it vanishes.
    pub fn syzygy_identity_holds(&self) -> Result<bool, PcbError> {
        let b = self.syzygy_vectors()?;
        let mut sum = SparsePolynomial::zero(Rationals, self.n);
        for (bi, f) in b.iter().zip(self.generators()) {
            sum = &sum + &(&Binomial::monomial(Rationals, bi) * &f.to_polynomial(Rationals));
        }
        Ok(sum.is_zero())
    }

    /// Expands `x_1·g - x_n^{a_nn - a_n1}·f_1 - g1·f_n` and checks that it
    /// vanishes.
    pub fn witness_identity_holds(&self) -> Result<bool, PcbError> {
        let n = self.n;
        let g = self.mixedness_witness()?.to_polynomial(Rationals);
        let (shift, g1) = self.witness_cofactors()?;
        let f = self.generators();
        let x1 = SparsePolynomial::var(Rationals, n, 0);
        let mut xn = vec![0; n];
        xn[n - 1] = shift;
        let lhs = &x1 * &g;
        let rhs = &(&Binomial::monomial(Rationals, &xn) * &f[0].to_polynomial(Rationals))
            + &(&Binomial::monomial(Rationals, &g1) * &f[n - 1].to_polynomial(Rationals));
        Ok((&lhs - &rhs).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{onecomp, simplest};
    use super::*;

    #[test]
    fn syzygies_small_cases() {
        let two = PcbMatrix::from_i64_rows(&[[3, -3], [-5, 5]]).unwrap();
        assert_eq!(two.syzygy_vectors().unwrap(), vec![vec![0, 0], vec![0, 0]]);

        let three = PcbMatrix::from_i64_rows(&[[3, -1, -2], [-1, 2, -1], [-2, -1, 3]]).unwrap();
        // b(1) = (0,0,a32), b(2) = (a13,0,0), b(3) = (0,a21,0)
        assert_eq!(three.syzygy_vectors().unwrap(), vec![vec![0, 0, 1], vec![2, 0, 0], vec![0, 1, 0]]);
        assert!(three.syzygy_identity_holds().unwrap());
    }

    #[test]
    fn syzygies_n4() {
        assert_eq!(simplest().syzygy_vectors().unwrap()[3], vec![0, 1, 2, 0]);
        assert_eq!(onecomp().syzygy_vectors().unwrap()[3], vec![0, 1, 2, 0]);
        // the n = 4 relation written out in full
        let p = onecomp();
        let a = |i: usize, j: usize| p.a(i - 1, j - 1);
        let b = p.syzygy_vectors().unwrap();
        assert_eq!(b[0], vec![0, 0, a(3, 2), a(4, 2) + a(4, 3)]);
        assert_eq!(b[1], vec![a(1, 3) + a(1, 4), 0, 0, a(4, 3)]);
        assert_eq!(b[2], vec![a(1, 4), a(2, 4) + a(2, 1), 0, 0]);
        assert_eq!(b[3], vec![0, a(2, 1), a(3, 1) + a(3, 2), 0]);
        assert!(p.syzygy_identity_holds().unwrap());
    }

    #[test]
    fn witness() {
        let g = simplest().mixedness_witness().unwrap();
        assert_eq!(g, Binomial::new(vec![2, 0, 0, 2], vec![0, 2, 2, 0]));
        assert!(simplest().witness_identity_holds().unwrap());
        assert!(onecomp().witness_identity_holds().unwrap());
        let three = PcbMatrix::from_i64_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).unwrap();
        assert_eq!(three.mixedness_witness().unwrap_err(), PcbError::DimensionTooSmall { n: 3, needed: 4 });
    }

    #[test]
    fn grading() {
        let nu: Vec<BigInt> = [20, 24, 31, 25].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(grading_degree(&nu, &[0, 4, 0, 0]).unwrap(), BigInt::from(96));
        assert_eq!(grading_degree(&nu, &[2, 0, 1, 1]).unwrap(), BigInt::from(96));
        assert_eq!(grading_degree(&nu, &[0; 4]).unwrap(), BigInt::from(0));
        assert!(grading_degree(&nu, &[1]).is_err());
    }
}
