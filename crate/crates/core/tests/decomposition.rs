mod common;

use std::collections::BTreeSet;

use common::{ideal, onecomp, poly, simplest};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use pcb_core::decomp::{
    decompose, embedded_component, enumerate_components, hull, hull_by_saturation, realize_over_prime_field,
    unmixedness_test, verify_full_decomposition, DecompError, VerificationOutcome,
};
use pcb_core::pcb::PcbMatrix;
use pcb_core::poly::{ring_map_kernel, Field, Monomial, PrimeField, Rationals, SparsePolynomial};
use pcb_core::FpIdeal;

/// The sixteen morphisms of the simplest example as powers of `i` on
/// `x_1, x_2, x_3`, with `x_4 ↦ t`.
const PAPER_TUPLES: [[u32; 3]; 16] = [
    [0, 0, 0],
    [0, 3, 1],
    [0, 2, 2],
    [0, 1, 3],
    [3, 1, 0],
    [3, 0, 1],
    [3, 3, 2],
    [3, 2, 3],
    [2, 2, 0],
    [2, 1, 1],
    [2, 0, 2],
    [2, 3, 3],
    [1, 3, 0],
    [1, 2, 1],
    [1, 1, 2],
    [1, 0, 3],
];

/// Rescales `t` so that `x_4` has coefficient 1; here `ν = (1, 1, 1, 1)`.
fn normalized(e: &[BigInt]) -> [u32; 3] {
    let r = BigInt::from(4);
    let shift = &e[3];
    let v: Vec<u32> = (0..3).map(|i| (&e[i] - shift).mod_floor(&r).to_u32().unwrap()).collect();
    [v[0], v[1], v[2]]
}

#[test]
fn sixteen_tuples_match_up_to_rescaling() {
    let specs = enumerate_components(&simplest()).unwrap();
    let ours: BTreeSet<[u32; 3]> = specs.iter().map(|s| normalized(&s.coeff_exponents)).collect();
    let theirs: BTreeSet<[u32; 3]> = PAPER_TUPLES.into_iter().collect();
    assert_eq!(ours, theirs);
    assert_eq!(normalized(&specs[0].coeff_exponents), [0, 0, 0]);
}

fn linear_component(f5: PrimeField, e: [u32; 3]) -> FpIdeal {
    // x_j - 2^{e_j} x_4
    let gens: Vec<SparsePolynomial<PrimeField>> = (0..3)
        .map(|j| {
            let mut xj = [0u32; 4];
            xj[j] = 1;
            poly(f5, &[(1, &xj), (-(2i64.pow(e[j])), &[0, 0, 0, 1])])
        })
        .collect();
    pcb_core::poly::IdealHandle::new(f5, 4, gens).unwrap()
}

#[test]
fn realized_components_are_linear_and_vanish_on_generators() {
    let f5 = PrimeField::new(5).unwrap();
    let p = simplest();
    let comps = realize_over_prime_field(&p, 5).unwrap();
    let specs = enumerate_components(&p).unwrap();
    assert_eq!(comps.len(), 16);
    for (c, s) in comps.iter().zip(&specs) {
        let e = normalized(&s.coeff_exponents);
        assert!(c.same_ideal(&linear_component(f5, e)).unwrap());
        // every binomial vanishes at (2^{e_1}, 2^{e_2}, 2^{e_3}, 1)
        let point: Vec<u64> = e.iter().map(|&k| 2u64.pow(k) % 5).chain([1]).collect();
        for f in p.generators() {
            let eval = |m: &[u32]| m.iter().zip(&point).map(|(&k, &x)| x.pow(k) % 5).product::<u64>() % 5;
            assert_eq!(eval(&f.plus), eval(&f.minus));
        }
    }
    for (a, b) in comps.iter().enumerate().flat_map(|(i, a)| comps[i + 1..].iter().map(move |b| (a, b))) {
        assert!(!a.same_ideal(b).unwrap());
    }
}

#[test]
fn conjugate_pairs_over_f5() {
    let f5 = PrimeField::new(5).unwrap();
    type Gens<'a> = &'a [&'a [(i64, &'a [u32])]];
    let pairs: [([u32; 3], [u32; 3], Gens); 6] = [
        (
            [0, 3, 1],
            [0, 1, 3],
            &[
                &[(1, &[1, 0, 0, 0]), (-1, &[0, 0, 0, 1])],
                &[(1, &[0, 1, 0, 0]), (1, &[0, 0, 1, 0])],
                &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])],
            ],
        ),
        (
            [3, 1, 0],
            [1, 3, 0],
            &[
                &[(1, &[1, 0, 0, 0]), (1, &[0, 1, 0, 0])],
                &[(1, &[0, 2, 0, 0]), (1, &[0, 0, 0, 2])],
                &[(1, &[0, 0, 1, 0]), (-1, &[0, 0, 0, 1])],
            ],
        ),
        (
            [3, 0, 1],
            [1, 0, 3],
            &[
                &[(1, &[1, 0, 0, 0]), (1, &[0, 0, 1, 0])],
                &[(1, &[0, 1, 0, 0]), (-1, &[0, 0, 0, 1])],
                &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])],
            ],
        ),
        (
            [3, 3, 2],
            [1, 1, 2],
            &[
                &[(1, &[1, 0, 0, 0]), (-1, &[0, 1, 0, 0])],
                &[(1, &[0, 2, 0, 0]), (1, &[0, 0, 0, 2])],
                &[(1, &[0, 0, 1, 0]), (1, &[0, 0, 0, 1])],
            ],
        ),
        (
            [3, 2, 3],
            [1, 2, 1],
            &[
                &[(1, &[1, 0, 0, 0]), (-1, &[0, 0, 1, 0])],
                &[(1, &[0, 1, 0, 0]), (1, &[0, 0, 0, 1])],
                &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])],
            ],
        ),
        (
            [2, 1, 1],
            [2, 3, 3],
            &[
                &[(1, &[1, 0, 0, 0]), (1, &[0, 0, 0, 1])],
                &[(1, &[0, 1, 0, 0]), (-1, &[0, 0, 1, 0])],
                &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])],
            ],
        ),
    ];
    for (a, b, gens) in pairs {
        let meet = linear_component(f5, a).intersect(&linear_component(f5, b)).unwrap();
        assert!(meet.same_ideal(&ideal(f5, gens)).unwrap(), "pair {a:?} {b:?}");
    }
}

#[test]
fn onecomp_hull_is_the_monomial_curve() {
    let p = onecomp();
    let report = decompose(&p).unwrap();
    assert!(report.hull_prime);
    assert_eq!(report.components.len(), 1);
    assert_eq!(report.embedded_generator, Some(vec![0, 1, 2, 0]));
    let images: Vec<_> = [20, 24, 31, 25]
        .iter()
        .map(|&w| SparsePolynomial::monomial(Rationals, Monomial::new([w]), Rationals.one()))
        .collect();
    let herzog = ring_map_kernel(Rationals, &images).unwrap();
    assert!(hull(&p, Rationals).unwrap().same_ideal(&herzog).unwrap());
    let (sat, n) = hull_by_saturation(&p, Rationals).unwrap();
    assert!(sat.same_ideal(&herzog).unwrap());
    assert_eq!(n, 2);
}

#[test]
fn embedded_component_of_onecomp() {
    let e = embedded_component(&onecomp(), Rationals).unwrap();
    assert_eq!(e.generator, vec![0, 1, 2, 0]);
    assert!(e.nilpotency.iter().all(|&k| k.is_power_of_two()));
}

#[test]
fn three_variable_instances_are_unmixed() {
    for rows in [
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
        [[3, -1, -2], [-1, 2, -1], [-2, -1, 3]],
        [[5, -2, -3], [-4, 7, -3], [-1, -1, 2]],
    ] {
        let p = PcbMatrix::from_i64_rows(&rows).unwrap();
        assert!(unmixedness_test(&p, Rationals).unwrap(), "{rows:?}");
    }
}

#[test]
fn n3_full_verification_over_fp() {
    let p = PcbMatrix::from_i64_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).unwrap();
    // d = 3, so p = 7 has the cube roots of unity
    let VerificationOutcome::Full(v) = verify_full_decomposition(&p, 7).unwrap() else {
        panic!("generic path expected");
    };
    assert_eq!(v.components.len(), 3);
    assert!(v.embedded.is_none());
    assert!(v.intersection_equals_ideal && v.hull_matches);
}

#[test]
fn bad_characteristic_is_rejected() {
    let err = verify_full_decomposition(&simplest(), 3).unwrap_err();
    assert_eq!(err, DecompError::BadPrime { p: 3, r: BigInt::from(4) });
}
