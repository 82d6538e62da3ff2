pub mod decomp;
pub mod intmat;
pub mod pcb;
pub mod poly;
pub mod scalar;

use num_bigint::BigInt;

pub type IntMatrix = intmat::Matrix<BigInt>;
pub type IntSnf = intmat::SnfResult<BigInt>;

pub type QPolynomial = poly::SparsePolynomial<poly::Rationals>;
pub type FpPolynomial = poly::SparsePolynomial<poly::PrimeField>;
pub type QIdeal = poly::IdealHandle<poly::Rationals>;
pub type FpIdeal = poly::IdealHandle<poly::PrimeField>;
