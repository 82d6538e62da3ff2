use num_bigint::BigInt;
use num_traits::One;

use super::{PcbError, PcbMatrix};

/// Number of primary components when the field contains the `d_{n-1}`-th
/// roots of unity and its characteristic does not divide `d_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCounts {
    pub isolated: BigInt,
    pub embedded: u32,
}

/// Everything computed directly from `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcbAnalysis {
    pub n: usize,
    pub m: Vec<BigInt>,
    pub d: BigInt,
    pub nu: Vec<BigInt>,
    pub invariant_factors: Vec<BigInt>,
    pub syzygy_exponents: Vec<Vec<u32>>,
    pub hull_prime: bool,
    pub counts: ComponentCounts,
}

impl PcbMatrix {
    pub fn component_counts(&self) -> ComponentCounts {
        let (_, d, _) = self.associated_vector();
        ComponentCounts { isolated: d, embedded: u32::from(self.n >= 4) }
    }

    pub fn analyze(&self) -> Result<PcbAnalysis, PcbError> {
        let (m, d, nu) = self.associated_vector();
        let snf = self.normalized_snf();
        Ok(PcbAnalysis {
            n: self.n,
            hull_prime: d.is_one(),
            counts: ComponentCounts { isolated: d.clone(), embedded: u32::from(self.n >= 4) },
            m,
            d,
            nu,
            invariant_factors: snf.invariant_factors,
            syzygy_exponents: self.syzygy_vectors()?,
        })
    }
}
