use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{DecompError, FIELD_NOTE, MAX_COMPONENTS};
use crate::pcb::{ComponentCounts, PcbMatrix};

/// One isolated component, `x_i ↦ ζ^{e_i} t^{ν_i}` with `ζ` a primitive
/// `r`-th root of unity, `r = d_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentSpec {
    /// `e`, reduced into `[0, r)`.
    pub coeff_exponents: Vec<BigInt>,
    pub weights: Vec<BigInt>,
    /// `k ∈ ∏ ℤ/d_j`, one entry per invariant factor.
    pub lambda_index: Vec<BigInt>,
}

/// Component counts with the field hypothesis they depend on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    /// Exact under `assumption`.
    pub exact: ComponentCounts,
    /// Holds over any field, as "at most".
    pub upper_bound: ComponentCounts,
    pub assumption: &'static str,
}

/// The `d` isolated components, `k = 0` first, then `k` in lexicographic order.
pub fn enumerate_components(p: &PcbMatrix) -> Result<Vec<ComponentSpec>, DecompError> {
    let snf = p.normalized_snf();
    let (_, d, nu) = p.associated_vector();
    if d > BigInt::from(MAX_COMPONENTS) {
        return Err(DecompError::TooManyComponents(d));
    }
    let factors = &snf.invariant_factors;
    let r = factors.last().cloned().unwrap_or_else(BigInt::one);
    let n = p.n();
    let radix: Vec<u64> = factors.iter().map(|f| f.to_u64().expect("bounded by d")).collect();
    let total = d.to_u64().expect("bounded");

    let mut out = Vec::with_capacity(total as usize);
    let mut k = vec![0u64; radix.len()];
    for _ in 0..total {
        let e = (0..n)
            .map(|i| {
                let s: BigInt =
                    k.iter().enumerate().map(|(j, &kj)| BigInt::from(kj) * (&r / &factors[j]) * snf.p.get(j, i)).sum();
                s.mod_floor(&r)
            })
            .collect();
        out.push(ComponentSpec {
            coeff_exponents: e,
            weights: nu.clone(),
            lambda_index: k.iter().map(|&v| BigInt::from(v)).collect(),
        });
        // odometer, last index fastest
        for j in (0..k.len()).rev() {
            k[j] += 1;
            if k[j] < radix[j] {
                break;
            }
            k[j] = 0;
        }
    }
    Ok(out)
}

pub fn hull_is_prime(p: &PcbMatrix) -> bool {
    p.associated_vector().1.is_one()
}

pub fn component_count(p: &PcbMatrix) -> CountReport {
    let exact = p.component_counts();
    CountReport { upper_bound: exact.clone(), exact, assumption: FIELD_NOTE }
}

/// `e · (column c of L) ≡ 0 (mod r)` for every column.
#[cfg(test)]
fn kills_every_column(p: &PcbMatrix, e: &[BigInt], r: &BigInt) -> bool {
    let l = p.signed();
    (0..p.n()).all(|c| {
        let s: BigInt = (0..p.n()).map(|i| &e[i] * l.get(i, c)).sum();
        num_traits::Zero::is_zero(&s.mod_floor(r))
    })
}
