use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PcbError, PcbMatrix};
use crate::intmat::smith_normal_form;
use crate::scalar::ext_gcd;
use crate::{IntMatrix, IntSnf};

/// Fitting data of the cokernel `ℤⁿ / (column lattice of L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionProfile {
    /// Generator of `Fit_0`, the gcd of the `n×n` minors (always 0).
    pub fit0: BigInt,
    /// Generator of `Fit_1`, the gcd of the `(n-1)×(n-1)` minors.
    pub fit1: BigInt,
    pub torsion_order: BigInt,
    /// The column lattice is a direct summand of `ℤⁿ`.
    pub is_direct_summand: bool,
    /// Invariant factors greater than 1, i.e. the cyclic factors of the torsion.
    pub factors: Vec<BigInt>,
}

impl PcbMatrix {
    /// Normal decomposition `P·L·Q = D` with the last row of `P` equal to `+ν`.
    ///
    /// # Panics
    /// If the last row of `P` is not `±ν`, which cannot happen for a valid
    /// matrix.
    pub fn normalized_snf(&self) -> IntSnf {
        let mut snf = smith_normal_form(&self.signed).expect("a PCB matrix is nonzero");
        let (_, d, nu) = self.associated_vector();
        let last = self.n - 1;
        let row = snf.p.row(last).to_vec();
        let neg: Vec<BigInt> = nu.iter().map(|v| -v).collect();
        if row == neg {
            snf.p.negate_row(last);
        } else {
            assert_eq!(row, nu, "last row of P is not ±ν");
        }
        assert_eq!(snf.invariant_factors.len(), self.n - 1, "rank of L is not n - 1");
        let prod: BigInt = snf.invariant_factors.iter().product();
        assert_eq!(prod, d, "invariant factors do not multiply to d");
        snf
    }

    /// Closed-form normal decompositions for `n = 2`, and for `n = 3` when
    /// `gcd(a_31, a_32) = d_1`.
    pub fn small_dim_decomposition(&self) -> Result<IntSnf, PcbError> {
        match self.n {
            2 => Ok(self.decomposition_n2()),
            3 => self.decomposition_n3(),
            n => Err(PcbError::NotApplicable(format!("closed forms exist for n = 2, 3, not n = {n}"))),
        }
    }

    fn decomposition_n2(&self) -> IntSnf {
        let a11 = BigInt::from(self.a[0][0]);
        let a22 = BigInt::from(self.a[1][1]);
        let (d, b1, b2) = ext_gcd(&a11, &a22);
        let p = IntMatrix::from_rows(vec![vec![b1, -b2], vec![&a22 / &d, &a11 / &d]]).expect("2x2");
        let q = IntMatrix::from_i64_rows(&[[1, 1], [0, 1]]).expect("2x2");
        let dm = IntMatrix::from_rows(vec![vec![d.clone(), BigInt::zero()], vec![BigInt::zero(), BigInt::zero()]])
            .expect("2x2");
        IntSnf { p, d: dm, q, invariant_factors: vec![d] }
    }

    fn decomposition_n3(&self) -> Result<IntSnf, PcbError> {
        let a = |i: usize, j: usize| BigInt::from(self.a[i - 1][j - 1]);
        let d1 = self.signed.minors_gcd(1);
        let (b, c1, c2) = ext_gcd(&a(3, 1), &a(3, 2));
        if b != d1 {
            return Err(PcbError::NotApplicable(format!("gcd(a31, a32) = {b} differs from d1 = {d1}")));
        }
        let (_, d, nu) = self.associated_vector();
        let d2 = &d / &d1;
        let alpha1 = -&c1 * a(1, 1) + &c2 * a(1, 2);
        let alpha2 = &c1 * a(2, 1) - &c2 * a(2, 2);
        let (g, s1, s2) = ext_gcd(&nu[0], &nu[1]);
        if !g.is_one() {
            return Err(PcbError::NotApplicable(format!("gcd(nu1, nu2) = {g}")));
        }
        let c = &s2 * (&alpha1 / &d1) - &s1 * (&alpha2 / &d1);
        let (t31, t32) = (a(3, 1) / &b, a(3, 2) / &b);
        let (zero, one) = (BigInt::zero(), BigInt::one());
        let p =
            IntMatrix::from_rows(vec![vec![zero.clone(), zero.clone(), one.clone()], vec![s2, -s1, -c], nu.clone()])
                .expect("3x3");
        let q = IntMatrix::from_rows(vec![
            vec![-c1, t32, one.clone()],
            vec![-c2, -t31, one.clone()],
            vec![zero.clone(), zero.clone(), one],
        ])
        .expect("3x3");
        let dm = IntMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) => d1.clone(),
            (1, 1) => d2.clone(),
            _ => BigInt::zero(),
        });
        Ok(IntSnf { p, d: dm, q, invariant_factors: vec![d1, d2] })
    }

    pub fn torsion_profile(&self) -> TorsionProfile {
        let fit0 = self.signed.minors_gcd(self.n as isize);
        let fit1 = self.signed.minors_gcd(self.n as isize - 1);
        let snf = self.normalized_snf();
        let torsion_order: BigInt = snf.invariant_factors.iter().product();
        let factors = snf.invariant_factors.iter().filter(|f| !f.is_one()).cloned().collect();
        TorsionProfile { fit0, is_direct_summand: torsion_order.is_one(), torsion_order, fit1, factors }
    }

    /// `d_{n-1}`, the exponent of the torsion group.
    pub fn exponent(&self) -> BigInt {
        self.normalized_snf().invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
    }
}
