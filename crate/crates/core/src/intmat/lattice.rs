use super::{smith_normal_form, Matrix, MatrixError};
use crate::scalar::IntScalar;

/// Decides whether `v` lies in the lattice spanned by the columns of `m`.
///
/// On success returns a certificate `c` with `m·c = v`. Solved through the
/// normal decomposition: `D·(Q⁻¹c) = P·v` must be solvable componentwise.
pub fn lattice_contains<T: IntScalar>(m: &Matrix<T>, v: &[T]) -> Result<Option<Vec<T>>, MatrixError> {
    if v.len() != m.rows() {
        return Err(MatrixError::DimensionMismatch(format!("vector of length {} against {} rows", v.len(), m.rows())));
    }
    if m.is_zero() {
        let zero = v.iter().all(T::is_zero);
        return Ok(zero.then(|| vec![T::zero(); m.cols()]));
    }
    let snf = smith_normal_form(m)?;
    let w = snf.p.mul_vec(v)?;
    let rank = snf.rank();
    let mut y = vec![T::zero(); m.cols()];
    for (i, wi) in w.iter().enumerate() {
        if i < rank {
            let (quot, rem) = wi.div_rem(&snf.invariant_factors[i]);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[i] = quot;
        } else if !wi.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(snf.q.mul_vec(&y)?))
}
