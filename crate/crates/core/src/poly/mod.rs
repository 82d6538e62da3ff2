//! Exact multivariate polynomials and a Buchberger engine over ℚ and `F_p`.

mod field;
mod groebner;
mod ideal;
mod monomial;
mod order;
mod polynomial;

pub use field::{is_prime, Field, PrimeField, Rationals};
pub use groebner::{groebner_basis, s_polynomial, GroebnerBasis};
pub use ideal::{ring_map_kernel, IdealHandle};
pub use monomial::Monomial;
pub use order::{MonomialOrder, Tiebreak};
pub use polynomial::SparsePolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("coefficient field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("colon by the zero polynomial")]
    ZeroDivisor,
    #[error("image {0} is not a single term in one auxiliary variable")]
    NonTermImage(usize),
    #[error("unsupported coefficient field: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("order mismatch: {0}")]
    OrderMismatch(String),
}
