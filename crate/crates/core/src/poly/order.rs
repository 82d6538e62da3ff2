use std::cmp::Ordering;

use super::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    DegRevLex,
}

/// A term order on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Weighted degree first, then the tiebreak order.
    Weighted {
        weights: Vec<u64>,
        tiebreak: Tiebreak,
    },
    /// Product order for elimination: the first `block` variables compared
    /// lexicographically, then the remaining ones by weighted degree followed by
    /// degrevlex. `weights` covers every variable; the block part only feeds the
    /// pair-selection degree.
    Elimination {
        block: usize,
        weights: Vec<u64>,
    },
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u64>) -> Self {
        MonomialOrder::Weighted { weights, tiebreak: Tiebreak::DegRevLex }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Lex => lex(x, y),
            MonomialOrder::DegRevLex => degrevlex(x, y),
            MonomialOrder::Weighted { weights, tiebreak } => weighted(weights, x, y).then_with(|| match tiebreak {
                Tiebreak::Lex => lex(x, y),
                Tiebreak::DegRevLex => degrevlex(x, y),
            }),
            MonomialOrder::Elimination { block, weights } => {
                let k = *block;
                lex(&x[..k], &y[..k])
                    .then_with(|| weighted(&weights[k..], &x[k..], &y[k..]))
                    .then_with(|| degrevlex(&x[k..], &y[k..]))
            }
        }
    }

    /// Degree used by the normal selection strategy.
    pub fn selection_degree(&self, m: &Monomial) -> u64 {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => m.degree(),
            MonomialOrder::Weighted { weights, .. } | MonomialOrder::Elimination { weights, .. } => {
                m.weighted_degree(weights)
            }
        }
    }

    /// Grading weights this order induces on `nvars` variables (all ones for
    /// the unweighted orders).
    pub fn grading_weights(&self, nvars: usize) -> Vec<u64> {
        match self {
            MonomialOrder::Weighted { weights, .. } | MonomialOrder::Elimination { weights, .. } => weights.clone(),
            _ => vec![1; nvars],
        }
    }

    pub(crate) fn check_arity(&self, nvars: usize) -> Result<(), String> {
        match self {
            MonomialOrder::Weighted { weights, .. } if weights.len() != nvars => {
                Err(format!("{} weights for {nvars} variables", weights.len()))
            }
            MonomialOrder::Elimination { block, weights } if weights.len() != nvars || *block > nvars => {
                Err(format!("elimination block {block} with {} weights for {nvars} variables", weights.len()))
            }
            _ => Ok(()),
        }
    }
}

fn lex(x: &[u32], y: &[u32]) -> Ordering {
    x.cmp(y)
}

fn degrevlex(x: &[u32], y: &[u32]) -> Ordering {
    let dx: u64 = x.iter().map(|&e| e as u64).sum();
    let dy: u64 = y.iter().map(|&e| e as u64).sum();
    dx.cmp(&dy).then_with(|| {
        for (a, b) in x.iter().zip(y).rev() {
            if a != b {
                // smaller exponent in the last differing variable wins
                return b.cmp(a);
            }
        }
        Ordering::Equal
    })
}

fn weighted(w: &[u64], x: &[u32], y: &[u32]) -> Ordering {
    let dx: u64 = x.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
    let dy: u64 = y.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
    dx.cmp(&dy)
}
