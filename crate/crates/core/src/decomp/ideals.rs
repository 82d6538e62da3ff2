use crate::pcb::{Binomial, PcbMatrix};
use crate::poly::{Field, IdealHandle, MonomialOrder, SparsePolynomial};

use super::DecompError;

/// Largest power tried when certifying `x_i^N ∈ 𝔠`.
const MAX_NILPOTENCY: u32 = 1 << 16;

/// `I = (f_1, …, f_n)` under the `ν`-weighted order, in which every generator
/// is homogeneous.
pub fn generator_ideal<F: Field>(p: &PcbMatrix, field: F) -> Result<IdealHandle<F>, DecompError> {
    ideal_of(p, field, p.n())
}

fn ideal_of<F: Field>(p: &PcbMatrix, field: F, count: usize) -> Result<IdealHandle<F>, DecompError> {
    let weights = p.weights().ok_or(DecompError::WeightsTooLarge)?;
    let gens = p.generators().iter().take(count).map(|b| b.to_polynomial(field)).collect();
    Ok(IdealHandle::new(field, p.n(), gens)?.with_order(MonomialOrder::weighted(weights))?)
}

fn b_last<F: Field>(p: &PcbMatrix, field: F) -> Result<SparsePolynomial<F>, DecompError> {
    let b = p.syzygy_vectors()?;
    Ok(Binomial::monomial(field, &b[p.n() - 1]))
}

/// The hull `S(I) = I : x^{b(n)}`.
pub fn hull<F: Field>(p: &PcbMatrix, field: F) -> Result<IdealHandle<F>, DecompError> {
    let i = generator_ideal(p, field)?;
    Ok(i.colon(&b_last(p, field)?)?)
}

/// `J : x^{b(n)}` with `J = (f_1, …, f_{n-1})`.
pub fn hull_from_subideal<F: Field>(p: &PcbMatrix, field: F) -> Result<IdealHandle<F>, DecompError> {
    let j = ideal_of(p, field, p.n() - 1)?;
    Ok(j.colon(&b_last(p, field)?)?)
}

/// `I : x_1^∞` and its stabilization exponent.
pub fn hull_by_saturation<F: Field>(p: &PcbMatrix, field: F) -> Result<(IdealHandle<F>, u32), DecompError> {
    let i = generator_ideal(p, field)?;
    Ok(i.saturate(&SparsePolynomial::var(field, p.n(), 0))?)
}

/// True iff `I : x_1 = I`.
pub fn unmixedness_test<F: Field>(p: &PcbMatrix, field: F) -> Result<bool, DecompError> {
    let i = generator_ideal(p, field)?;
    let c = i.colon(&SparsePolynomial::var(field, p.n(), 0))?;
    Ok(c.is_subset_of(&i)?)
}

/// Certifies `g ∈ (I : x_1) \ I` for the mixedness witness without Gröbner
/// bases: the identity `x_1·g = x_n^s·f_1 + g_1·f_n` gives membership in
/// `I : x_1`, and setting `x_2 = … = x_{n-1} = 0` sends `I` to a monomial
/// ideal that misses the image of `g`.
pub fn witness_certificate(p: &PcbMatrix) -> Result<bool, DecompError> {
    let n = p.n();
    if !p.witness_identity_holds()? {
        return Ok(false);
    }
    let g = p.mixedness_witness()?;
    let keep = |e: &[u32]| (1..n - 1).all(|i| e[i] == 0);
    // surviving monomials of each generator after the specialization
    let mut images: Vec<&[u32]> = Vec::new();
    let gens = p.generators();
    for f in &gens {
        match (keep(&f.plus), keep(&f.minus)) {
            (true, true) => return Ok(false),
            (true, false) => images.push(&f.plus),
            (false, true) => images.push(&f.minus),
            (false, false) => {}
        }
    }
    if keep(&g.minus) || !keep(&g.plus) {
        return Ok(false);
    }
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    Ok(!images.iter().any(|m| divides(m, &g.plus)))
}

/// The embedded component `I + (x^{b(n)})` with the checks that make it one.
#[derive(Debug, Clone)]
pub struct EmbeddedComponent<F: Field> {
    pub ideal: IdealHandle<F>,
    pub generator: Vec<u32>,
    /// For each variable, the least power of two `N` found with `x_i^N` in the
    /// component.
    pub nilpotency: Vec<u32>,
}

pub fn embedded_component<F: Field>(p: &PcbMatrix, field: F) -> Result<EmbeddedComponent<F>, DecompError> {
    let n = p.n();
    if n < 4 {
        return Err(DecompError::DimensionTooSmall(n));
    }
    let i = generator_ideal(p, field)?;
    let xb = b_last(p, field)?;
    let s = i.colon(&xb)?;
    if !s.colon(&xb)?.same_ideal(&s)? {
        return Err(DecompError::HypothesisFailed("I : x^b(n) differs from I : x^2b(n)".into()));
    }
    let c = i.with_generators(&[xb])?;

    let mut nilpotency = Vec::with_capacity(n);
    for v in 0..n {
        let x = SparsePolynomial::var(field, n, v);
        let mut e = 1;
        while !c.contains(&x.pow(e))? {
            e *= 2;
            if e > MAX_NILPOTENCY {
                return Err(DecompError::VerificationFailed {
                    component: None,
                    reason: format!("no power of x{} up to {MAX_NILPOTENCY} lies in I + (x^b(n))", v + 1),
                });
            }
        }
        nilpotency.push(e);
    }

    if !s.intersect(&c)?.same_ideal(&i)? {
        return Err(DecompError::VerificationFailed { component: None, reason: "S(I) ∩ 𝔠 differs from I".into() });
    }
    if s.same_ideal(&i)? {
        return Err(DecompError::VerificationFailed { component: None, reason: "S(I) equals I".into() });
    }
    let generator = p.syzygy_vectors()?.swap_remove(n - 1);
    Ok(EmbeddedComponent { ideal: c, generator, nilpotency })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rationals;

    fn simplest() -> PcbMatrix {
        PcbMatrix::from_i64_rows(&[[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]).unwrap()
    }

    #[test]
    fn hull_three_ways() {
        let p = simplest();
        let a = hull(&p, Rationals).unwrap();
        let b = hull_from_subideal(&p, Rationals).unwrap();
        let (c, n) = hull_by_saturation(&p, Rationals).unwrap();
        assert_eq!(n, 1);
        assert!(a.same_ideal(&b).unwrap() && a.same_ideal(&c).unwrap());
    }

    #[test]
    fn unmixedness() {
        assert!(!unmixedness_test(&simplest(), Rationals).unwrap());
        let three = PcbMatrix::from_i64_rows(&[[3, -1, -2], [-1, 2, -1], [-2, -1, 3]]).unwrap();
        assert!(unmixedness_test(&three, Rationals).unwrap());
        assert!(witness_certificate(&simplest()).unwrap());
    }

    #[test]
    fn embedded() {
        let e = embedded_component(&simplest(), Rationals).unwrap();
        assert_eq!(e.generator, vec![0, 1, 2, 0]);
        assert_eq!(e.ideal.generators().len(), 5);
        let three = PcbMatrix::from_i64_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).unwrap();
        assert_eq!(embedded_component(&three, Rationals).unwrap_err(), DecompError::DimensionTooSmall(3));
    }
}
