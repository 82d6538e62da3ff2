//! Primary decomposition of PCB ideals: isolated components as monomial
//! curves with coefficients, the hull, and the embedded `𝔪`-primary component.

mod components;
mod ideals;
mod realize;

use num_bigint::BigInt;
use thiserror::Error;

use crate::pcb::PcbError;
use crate::poly::OracleError;

pub use components::{component_count, enumerate_components, hull_is_prime, ComponentSpec, CountReport};
pub use ideals::{
    embedded_component, generator_ideal, hull, hull_by_saturation, hull_from_subideal, unmixedness_test,
    witness_certificate, EmbeddedComponent,
};
pub use realize::{
    primitive_root_of_unity, realize_over_prime_field, verify_full_decomposition, FullVerification,
    SpecialCaseVerification, VerificationOutcome,
};

/// Field hypothesis under which the component count is exact.
pub const FIELD_NOTE: &str = "k contains the d_{n-1}-th roots of unity and char k is 0 or does not divide d_{n-1}";

/// Upper bound on the number of isolated components this crate enumerates.
pub const MAX_COMPONENTS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error(transparent)]
    Pcb(#[from] PcbError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("BadPrime({p}, {r}): need p = 1 mod {r}")]
    BadPrime { p: u64, r: BigInt },
    #[error("DimensionTooSmall: the embedded component exists only for n >= 4, got n = {0}")]
    DimensionTooSmall(usize),
    #[error("HypothesisFailed: {0}")]
    HypothesisFailed(String),
    #[error("VerificationFailed{}: {reason}", .component.map(|c| format!("({c})")).unwrap_or_default())]
    VerificationFailed { component: Option<usize>, reason: String },
    #[error("TooManyComponents: d = {0} exceeds the enumeration limit")]
    TooManyComponents(BigInt),
    #[error("WeightsTooLarge: grading weights do not fit in 64 bits")]
    WeightsTooLarge,
}

/// Symbolic decomposition data for one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub analysis: crate::pcb::PcbAnalysis,
    pub components: Vec<ComponentSpec>,
    /// Exponent vector `b(n)` of the extra generator of the embedded component,
    /// present for `n >= 4`.
    pub embedded_generator: Option<Vec<u32>>,
    pub hull_prime: bool,
    pub field_note: &'static str,
}

pub fn decompose(p: &crate::pcb::PcbMatrix) -> Result<DecompositionReport, DecompError> {
    let analysis = p.analyze()?;
    let components = enumerate_components(p)?;
    let embedded_generator = (p.n() >= 4).then(|| analysis.syzygy_exponents[p.n() - 1].clone());
    Ok(DecompositionReport {
        hull_prime: analysis.hull_prime,
        analysis,
        components,
        embedded_generator,
        field_note: FIELD_NOTE,
    })
}
