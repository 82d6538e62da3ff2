use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::components::enumerate_components;
use super::ideals::{embedded_component, generator_ideal, hull};
use super::DecompError;
use crate::pcb::PcbMatrix;
use crate::poly::{ring_map_kernel, Field, IdealHandle, Monomial, PrimeField, SparsePolynomial};
use crate::FpIdeal;

/// `ζ = g^{(p-1)/r}` for the least primitive root `g` modulo `p`.
pub fn primitive_root_of_unity(field: PrimeField, r: u64) -> Result<u32, DecompError> {
    let p = field.modulus();
    if r == 0 || !(p - 1).is_multiple_of(r) {
        return Err(DecompError::BadPrime { p, r: BigInt::from(r) });
    }
    let g = field.least_primitive_root();
    Ok(field.pow(&g, (p - 1) / r))
}

fn exponent_u64(p: &PcbMatrix) -> u64 {
    // r divides d, which the caller has already bounded through enumeration
    p.exponent().to_u64().unwrap_or(u64::MAX)
}

fn checked_field(p: &PcbMatrix, prime: u64) -> Result<(PrimeField, u32), DecompError> {
    let field = PrimeField::new(prime)?;
    let r = p.exponent();
    if !BigInt::from(prime - 1).is_multiple_of(&r) {
        return Err(DecompError::BadPrime { p: prime, r });
    }
    let zeta = primitive_root_of_unity(field, exponent_u64(p))?;
    Ok((field, zeta))
}

/// The `d` isolated components over `F_p` as kernels of
/// `x_i ↦ ζ^{e_i} t^{ν_i}`, in enumeration order.
pub fn realize_over_prime_field(p: &PcbMatrix, prime: u64) -> Result<Vec<FpIdeal>, DecompError> {
    let (field, zeta) = checked_field(p, prime)?;
    let specs = enumerate_components(p)?;
    specs
        .par_iter()
        .map(|s| {
            let images: Vec<_> = s
                .coeff_exponents
                .iter()
                .zip(&s.weights)
                .map(|(e, w)| {
                    let c = field.pow(&zeta, e.to_u64().expect("e < r"));
                    let w = w.to_u32().ok_or(DecompError::WeightsTooLarge)?;
                    Ok(SparsePolynomial::monomial(field, Monomial::new([w]), c))
                })
                .collect::<Result<_, DecompError>>()?;
            Ok(ring_map_kernel(field, &images)?)
        })
        .collect()
}

/// Outcome of the full oracle check over a prime field with enough roots of
/// unity.
#[derive(Debug, Clone)]
pub struct FullVerification {
    pub prime: u64,
    pub zeta: u32,
    pub components: Vec<FpIdeal>,
    pub embedded: Option<FpIdeal>,
    /// The isolated components intersect to the hull.
    pub hull_matches: bool,
    /// All components intersect to `I`.
    pub intersection_equals_ideal: bool,
    /// Entry `k` is true when dropping component `k` (the embedded one last)
    /// strictly enlarges the intersection.
    pub irredundant: Vec<bool>,
}

/// The bad-characteristic check for the 4×4 matrix with diagonal 3 over `F_2`,
/// with `𝔞 = (x1 - x4, x2 - x4, x3 - x4)`: some power of `𝔞` lies in `S(I)`,
/// `S(I) ⊆ 𝔞` and `S(I) ≠ I`, so `I` has exactly two primary components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCaseVerification {
    pub prime: u64,
    /// Whether `𝔞⁴ ⊆ S(I)`. It does not hold; the least power is 7.
    pub fourth_power_in_hull: bool,
    /// Least `k` with `𝔞^k ⊆ S(I)`.
    pub least_power: u32,
    pub hull_in_radical: bool,
    pub hull_differs: bool,
    pub components: usize,
}

/// Largest power of `𝔞` tried in the special case.
const MAX_SPECIAL_POWER: u32 = 16;

#[derive(Debug, Clone)]
pub enum VerificationOutcome {
    Full(FullVerification),
    SpecialCase(SpecialCaseVerification),
}

fn is_special_case(p: &PcbMatrix, prime: u64) -> bool {
    let target = [[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]];
    prime == 2 && PcbMatrix::from_i64_rows(&target).map(|t| &t == p).unwrap_or(false)
}

/// Intersects the realized components (and the embedded one when `n ≥ 4`),
/// compares with `I` over `F_p`, and checks that no component can be dropped.
pub fn verify_full_decomposition(p: &PcbMatrix, prime: u64) -> Result<VerificationOutcome, DecompError> {
    if is_special_case(p, prime) {
        return verify_special_case(p, prime).map(VerificationOutcome::SpecialCase);
    }
    let (field, zeta) = checked_field(p, prime)?;
    let components = realize_over_prime_field(p, prime)?;
    let embedded = if p.n() >= 4 { Some(embedded_component(p, field)?.ideal) } else { None };
    let ideal = generator_ideal(p, field)?;

    let mut all: Vec<&FpIdeal> = components.iter().collect();
    all.extend(embedded.iter());
    let count = all.len();

    // prefix[k] = C_0 ∩ … ∩ C_{k-1}; suffix[k] = C_k ∩ … ∩ C_{count-1}
    let mut prefix: Vec<Option<FpIdeal>> = vec![None];
    for c in &all {
        let next = match prefix.last().unwrap() {
            None => (*c).clone(),
            Some(acc) => acc.intersect(c)?,
        };
        prefix.push(Some(next));
    }
    let mut suffix: Vec<Option<FpIdeal>> = vec![None; count + 1];
    for k in (0..count).rev() {
        suffix[k] = Some(match &suffix[k + 1] {
            None => all[k].clone(),
            Some(acc) => all[k].intersect(acc)?,
        });
    }

    let full = prefix[count].as_ref().expect("at least one component");
    let intersection_equals_ideal = full.same_ideal(&ideal)?;
    let isolated = prefix[components.len()].as_ref().expect("at least one isolated component");
    let hull_matches = isolated.same_ideal(&hull(p, field)?)?;

    let irredundant = (0..count)
        .into_par_iter()
        .map(|k| {
            let rest = match (&prefix[k], &suffix[k + 1]) {
                (None, None) => return Ok(!ideal.is_unit()?),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (Some(a), Some(b)) => a.intersect(b)?,
            };
            Ok(!rest.same_ideal(&ideal)?)
        })
        .collect::<Result<Vec<bool>, DecompError>>()?;

    if !intersection_equals_ideal {
        return Err(DecompError::VerificationFailed {
            component: None,
            reason: "the components do not intersect to I".into(),
        });
    }
    if !hull_matches {
        return Err(DecompError::VerificationFailed {
            component: None,
            reason: "the isolated components do not intersect to S(I)".into(),
        });
    }
    if let Some(k) = irredundant.iter().position(|ok| !ok) {
        return Err(DecompError::VerificationFailed { component: Some(k), reason: "component is redundant".into() });
    }
    Ok(VerificationOutcome::Full(FullVerification {
        prime,
        zeta,
        components,
        embedded,
        hull_matches,
        intersection_equals_ideal,
        irredundant,
    }))
}

fn verify_special_case(p: &PcbMatrix, prime: u64) -> Result<SpecialCaseVerification, DecompError> {
    let field = PrimeField::new(prime)?;
    let n = p.n();
    let x = |i| SparsePolynomial::var(field, n, i);
    let a = IdealHandle::new(field, n, (0..n - 1).map(|i| &x(i) - &x(n - 1)).collect())?;
    let ideal = generator_ideal(p, field)?;
    let s = hull(p, field)?;
    let mut least_power = None;
    let mut power = a.clone();
    for k in 1..=MAX_SPECIAL_POWER {
        if power.is_subset_of(&s)? {
            least_power = Some(k);
            break;
        }
        power = power.product(&a)?;
    }
    let Some(least_power) = least_power else {
        return Err(DecompError::VerificationFailed {
            component: None,
            reason: format!("no power of 𝔞 up to {MAX_SPECIAL_POWER} lies in S(I)"),
        });
    };
    let report = SpecialCaseVerification {
        prime,
        fourth_power_in_hull: least_power <= 4,
        least_power,
        hull_in_radical: s.is_subset_of(&a)?,
        hull_differs: !s.same_ideal(&ideal)?,
        components: 2,
    };
    if !(report.hull_in_radical && report.hull_differs) {
        return Err(DecompError::VerificationFailed { component: None, reason: format!("{report:?}") });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplest() -> PcbMatrix {
        PcbMatrix::from_i64_rows(&[[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]).unwrap()
    }

    #[test]
    fn roots_of_unity() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(primitive_root_of_unity(f5, 4).unwrap(), 2);
        assert_eq!(primitive_root_of_unity(f5, 1).unwrap(), 1);
        assert!(primitive_root_of_unity(f5, 3).is_err());
    }

    #[test]
    fn bad_prime() {
        let err = realize_over_prime_field(&simplest(), 7).unwrap_err();
        assert_eq!(err, DecompError::BadPrime { p: 7, r: BigInt::from(4) });
        assert!(err.to_string().starts_with("BadPrime(7, 4)"));
        assert!(matches!(realize_over_prime_field(&simplest(), 9), Err(DecompError::Oracle(_))));
    }

    #[test]
    fn herzog_component_first() {
        let comps = realize_over_prime_field(&simplest(), 5).unwrap();
        assert_eq!(comps.len(), 16);
        let f5 = PrimeField::new(5).unwrap();
        let x = |i| SparsePolynomial::var(f5, 4, i);
        let a1 = IdealHandle::new(f5, 4, (0..3).map(|i| &x(i) - &x(3)).collect()).unwrap();
        assert!(comps[0].same_ideal(&a1).unwrap());
    }

    #[test]
    fn special_case_power() {
        let VerificationOutcome::SpecialCase(v) = verify_full_decomposition(&simplest(), 2).unwrap() else {
            panic!("expected the special path");
        };
        assert_eq!(v.least_power, 7);
        assert!(!v.fourth_power_in_hull && v.hull_in_radical && v.hull_differs);
    }

    #[test]
    fn small_full_verification() {
        let p = PcbMatrix::from_i64_rows(&[[2, -2], [-2, 2]]).unwrap();
        let VerificationOutcome::Full(v) = verify_full_decomposition(&p, 3).unwrap() else {
            panic!("expected the generic path");
        };
        assert_eq!(v.components.len(), 2);
        assert!(v.embedded.is_none());
        assert_eq!(v.irredundant, vec![true, true]);
    }
}
