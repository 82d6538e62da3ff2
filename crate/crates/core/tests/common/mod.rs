#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use pcb_core::pcb::PcbMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5_eed0_f9cb;

pub fn simplest() -> PcbMatrix {
    PcbMatrix::from_i64_rows(&[[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]).unwrap()
}

pub fn onecomp() -> PcbMatrix {
    PcbMatrix::from_i64_rows(&[[4, -2, -1, -1], [-1, 4, -2, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]).unwrap()
}

/// All off-diagonal entries equal to `-1`, diagonal `n - 1`.
pub fn diagonal_family(n: usize) -> PcbMatrix {
    PcbMatrix::from_off_diagonal(&vec![vec![1; n]; n]).unwrap()
}

/// Off-diagonal magnitudes drawn uniformly from `1..=max`.
pub fn random_pcb<R: Rng>(rng: &mut R, n: usize, max: u32) -> PcbMatrix {
    let off: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(1..=max)).collect()).collect();
    PcbMatrix::from_off_diagonal(&off).unwrap()
}

/// The seeded corpus shared by the agreement and unmixedness checks: half
/// `n = 3`, half `n = 4`.
pub fn corpus(size: usize, max: u32) -> Vec<PcbMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..size).map(|k| random_pcb(&mut rng, if k % 2 == 0 { 3 } else { 4 }, max)).collect()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_i128(m: &pcb_core::IntMatrix) -> Vec<Vec<i128>> {
    m.to_rows().iter().map(|r| r.iter().map(|v| i128::try_from(v).unwrap()).collect()).collect()
}

/// Laplace expansion along the first row.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

pub fn cofactor_adjugate(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = m.len();
    let minor = |r: usize, c: usize| -> Vec<Vec<i128>> {
        m.iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
            .collect()
    };
    (0..n)
        .map(|i| (0..n).map(|j| if (i + j) % 2 == 0 { det(&minor(j, i)) } else { -det(&minor(j, i)) }).collect())
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `Δ_t`: gcd of all `t×t` minors.
pub fn minors_gcd(m: &[Vec<i128>], t: usize) -> i128 {
    let (rows, cols) = (m.len(), m[0].len());
    let mut g = 0;
    for rs in subsets(rows, t) {
        for cs in subsets(cols, t) {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

/// Expands `Σ_i c_i · (x^{p_i} - x^{q_i})` with plain hash-map bookkeeping.
pub fn expand(terms: &[(Vec<u32>, Vec<u32>, Vec<u32>)]) -> HashMap<Vec<u32>, i64> {
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    let add = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<u32>>();
    for (c, p, q) in terms {
        *acc.entry(add(c, p)).or_default() += 1;
        *acc.entry(add(c, q)).or_default() -= 1;
    }
    acc.retain(|_, v| *v != 0);
    acc
}

/// `Σ c·x^e` from `(c, e)` pairs.
pub fn poly<F: pcb_core::poly::Field>(field: F, terms: &[(i64, &[u32])]) -> pcb_core::poly::SparsePolynomial<F> {
    let n = terms[0].1.len();
    pcb_core::poly::SparsePolynomial::from_terms(
        field,
        n,
        terms.iter().map(|(c, e)| (pcb_core::poly::Monomial::new(e.iter().copied()), field.from_i64(*c))),
    )
}

pub fn ideal<F: pcb_core::poly::Field>(field: F, gens: &[&[(i64, &[u32])]]) -> pcb_core::poly::IdealHandle<F> {
    let polys: Vec<_> = gens.iter().map(|g| poly(field, g)).collect();
    let n = polys[0].nvars();
    pcb_core::poly::IdealHandle::new(field, n, polys).unwrap()
}
