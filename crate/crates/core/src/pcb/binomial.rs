use std::fmt;

use crate::poly::{Field, Monomial, SparsePolynomial};

/// `x^plus - x^minus` with unit coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
}

impl Binomial {
    pub fn new(plus: Vec<u32>, minus: Vec<u32>) -> Self {
        assert_eq!(plus.len(), minus.len(), "exponent vectors of different length");
        Self { plus, minus }
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    pub fn to_polynomial<F: Field>(&self, field: F) -> SparsePolynomial<F> {
        SparsePolynomial::binomial(field, &self.plus, &self.minus)
    }

    /// `x^e` as a polynomial.
    pub fn monomial<F: Field>(field: F, e: &[u32]) -> SparsePolynomial<F> {
        SparsePolynomial::monomial(field, Monomial::new(e.iter().copied()), field.one())
    }
}

/// Writes `x1^3*x4 - x2*x3`; the empty monomial prints as `1`.
fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[u32]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// `x^e` rendered as in the binomial display, e.g. `x2*x3^2`.
pub fn format_monomial(e: &[u32]) -> String {
    struct Mono<'a>(&'a [u32]);
    impl fmt::Display for Mono<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_monomial(f, self.0)
        }
    }
    Mono(e).to_string()
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.plus)?;
        f.write_str(" - ")?;
        write_monomial(f, &self.minus)
    }
}
