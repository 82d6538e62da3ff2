//! Scalar bounds shared by the integer linear algebra.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type. Implemented for `i64`, `i128` and `BigInt`;
/// the PCB pipeline itself always runs on `BigInt`.
pub trait IntScalar: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync {}

impl<T> IntScalar for T where T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync {}

/// Extended gcd with a non-negative gcd: returns `(g, s, t)` with `s*a + t*b = g`.
pub fn ext_gcd<T: IntScalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}
