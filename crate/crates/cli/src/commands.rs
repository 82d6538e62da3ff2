use num_bigint::BigInt;
use pcb_core::decomp::{
    self, embedded_component, hull, hull_by_saturation, hull_from_subideal, hull_is_prime, realize_over_prime_field,
    unmixedness_test, verify_full_decomposition, witness_certificate, ComponentSpec, DecompError, VerificationOutcome,
};
use pcb_core::pcb::{format_monomial, PcbMatrix};
use pcb_core::poly::{ring_map_kernel, Field, Monomial, PrimeField, Rationals, SparsePolynomial};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{int, ints, matrix, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Symbolic,
    Rationals,
    Prime(u64),
}

impl FieldChoice {
    pub fn label(&self) -> String {
        match self {
            FieldChoice::Symbolic => "symbolic".into(),
            FieldChoice::Rationals => "q".into(),
            FieldChoice::Prime(p) => format!("fp:{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Identities,
    Full,
}

pub fn analyze(p: &PcbMatrix) -> Result<Outcome, CliError> {
    let a = p.analyze()?;
    let t = p.torsion_profile();
    let n = p.n();
    Ok(json!({
        "n": n,
        "m": ints(&a.m),
        "d": int(&a.d),
        "nu": ints(&a.nu),
        "invariant_factors": ints(&a.invariant_factors),
        "generators": p.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "syzygy_exponents": a.syzygy_exponents,
        "b_n": a.syzygy_exponents[n - 1],
        "counts": {
            "isolated": int(&a.counts.isolated),
            "embedded": a.counts.embedded,
        },
        "hull_prime": a.hull_prime,
        "embedded_generator": (n >= 4).then(|| format_monomial(&a.syzygy_exponents[n - 1])),
        "torsion": {
            "fit0": int(&t.fit0),
            "fit1": int(&t.fit1),
            "order": int(&t.torsion_order),
            "direct_summand": t.is_direct_summand,
            "factors": ints(&t.factors),
        },
        "field_note": decomp::FIELD_NOTE,
    })
    .into())
}

pub fn snf(p: &PcbMatrix) -> Result<Outcome, CliError> {
    let s = p.normalized_snf();
    let (_, _, nu) = p.associated_vector();
    let closed = match p.small_dim_decomposition() {
        Ok(c) => json!({ "P": matrix(&c.p.to_rows()), "Q": matrix(&c.q.to_rows()), "D": matrix(&c.d.to_rows()) }),
        Err(e) => json!(e.to_string()),
    };
    Ok(json!({
        "L": matrix(&p.signed().to_rows()),
        "P": matrix(&s.p.to_rows()),
        "Q": matrix(&s.q.to_rows()),
        "D": matrix(&s.d.to_rows()),
        "invariant_factors": ints(&s.invariant_factors),
        "last_row_of_p_is_nu": s.p.row(p.n() - 1) == &nu[..],
        "contract_holds": s.check(p.signed()).is_ok(),
        "closed_form": closed,
    })
    .into())
}

fn parametrization(s: &ComponentSpec) -> String {
    s.coeff_exponents
        .iter()
        .zip(&s.weights)
        .enumerate()
        .map(|(i, (e, w))| format!("x{} ↦ ζ^{e} t^{w}", i + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

fn polys<F: Field>(ps: &[SparsePolynomial<F>]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

pub fn decompose(p: &PcbMatrix, field: FieldChoice) -> Result<Outcome, CliError> {
    let report = decomp::decompose(p)?;
    let r = p.exponent();
    let realized = match field {
        FieldChoice::Prime(prime) => Some(realize_over_prime_field(p, prime)?),
        _ => None,
    };
    let components: Vec<Value> = report
        .components
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let mut c = json!({
                "index": k,
                "lambda_index": ints(&s.lambda_index),
                "coeff_exponents": ints(&s.coeff_exponents),
                "weights": ints(&s.weights),
                "parametrization": parametrization(s),
            });
            if let Some(ideals) = &realized {
                c["generators"] = json!(polys(&ideals[k].basis().expect("kernel basis").polynomials()));
            }
            c
        })
        .collect();
    let mut embedded = report.embedded_generator.as_ref().map(|b| {
        json!({
            "generator_exponents": b,
            "generator": format_monomial(b),
            "ideal": format!("I + ({})", format_monomial(b)),
        })
    });
    let mut payload = json!({
        "field": field.label(),
        "r": int(&r),
        "zeta": "primitive r-th root of unity",
        "components": components,
        "embedded": Value::Null,
        "hull_prime": report.hull_prime,
        "field_note": report.field_note,
    });
    if let FieldChoice::Prime(prime) = field {
        let f = PrimeField::new(prime)?;
        payload["zeta"] = json!(decomp::primitive_root_of_unity(f, u64::try_from(&r).map_err(|_| too_large())?)?);
        if let Some(e) = embedded.as_mut() {
            let c = embedded_component(p, f)?;
            e["generators"] = json!(polys(c.ideal.generators()));
        }
    }
    payload["embedded"] = embedded.unwrap_or(Value::Null);
    Ok(payload.into())
}

fn too_large() -> CliError {
    CliError::Validation(DecompError::WeightsTooLarge.to_string())
}

struct Check {
    name: &'static str,
    status: &'static str,
    detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Check { name, status: if ok { "pass" } else { "fail" }, detail: detail.into() }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        Check { name, status: "skipped", detail: why.into() }
    }

    fn from_result(name: &'static str, r: Result<(bool, String), DecompError>) -> Self {
        match r {
            Ok((ok, detail)) => Check::new(name, ok, detail),
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }
}

fn identity_checks(p: &PcbMatrix) -> Vec<Check> {
    let n = p.n();
    let snf = p.normalized_snf();
    let (m, d, nu) = p.associated_vector();
    let product: BigInt = snf.invariant_factors.iter().product();
    let adj = p.signed().adjugate().expect("square");
    let mut checks = vec![
        Check::new("snf_contract", snf.check(p.signed()).is_ok(), "P·L·Q = D, unimodular, divisibility chain"),
        Check::new("last_row_is_nu", snf.p.row(n - 1) == &nu[..], "last row of P equals ν"),
        Check::new("product_of_invariant_factors", product == d, format!("∏ d_i = {product}, d = {d}")),
        Check::new("adjugate_rows_equal", adj.to_rows().iter().all(|r| r == &m), "every row of adj(L) equals m"),
        Check::from_result(
            "syzygy_identity",
            p.syzygy_identity_holds().map(|ok| (ok, "Σ x^b(i) f_i expands to 0".into())).map_err(Into::into),
        ),
    ];
    if n >= 4 {
        checks.push(Check::from_result(
            "witness_identity",
            p.witness_identity_holds().map(|ok| (ok, "x1·g = x_n^s·f1 + g1·f_n".into())).map_err(Into::into),
        ));
        checks.push(Check::from_result(
            "witness_certificate",
            witness_certificate(p).map(|ok| (ok, "g lies in (I : x1) but not in I".into())),
        ));
    } else {
        checks.push(Check::skipped("witness_identity", "needs n >= 4"));
        checks.push(Check::skipped("witness_certificate", "needs n >= 4"));
    }
    checks
}

fn oracle_checks<F: Field>(p: &PcbMatrix, field: F) -> Vec<Check> {
    let n = p.n();
    let mut checks = vec![
        Check::from_result(
            "hull_agreement",
            (|| {
                let a = hull(p, field)?;
                let b = hull_from_subideal(p, field)?;
                let (c, k) = hull_by_saturation(p, field)?;
                let ok = a.same_ideal(&b)? && a.same_ideal(&c)?;
                Ok((ok, format!("I : x^b(n) = J : x^b(n) = I : x1^∞ (stable at x1^{k})")))
            })(),
        ),
        Check::from_result(
            "unmixedness",
            unmixedness_test(p, field).map(|u| (u == (n <= 3), format!("I = I : x1 is {u}, expected {}", n <= 3))),
        ),
    ];
    if hull_is_prime(p) {
        checks.push(Check::from_result(
            "hull_is_monomial_curve",
            (|| {
                let weights = p.weights().ok_or(DecompError::WeightsTooLarge)?;
                let images: Vec<_> = weights
                    .iter()
                    .map(|&w| {
                        let w = u32::try_from(w).map_err(|_| DecompError::WeightsTooLarge)?;
                        Ok(SparsePolynomial::monomial(field, Monomial::new([w]), field.one()))
                    })
                    .collect::<Result<_, DecompError>>()?;
                let curve = ring_map_kernel(field, &images)?;
                Ok((hull(p, field)?.same_ideal(&curve)?, "S(I) is the kernel of x_i ↦ t^ν_i".into()))
            })(),
        ));
    } else {
        checks.push(Check::skipped("hull_is_monomial_curve", "d > 1"));
    }
    if n >= 4 {
        checks.push(Check::from_result(
            "embedded_component",
            embedded_component(p, field)
                .map(|c| (true, format!("I + ({}) is 𝔪-primary and S(I) ∩ it = I", format_monomial(&c.generator)))),
        ));
    } else {
        checks.push(Check::skipped("embedded_component", "needs n >= 4"));
    }
    checks
}

fn full_decomposition(p: &PcbMatrix, prime: u64) -> Result<Check, CliError> {
    let name = "full_decomposition";
    Ok(match verify_full_decomposition(p, prime) {
        Ok(VerificationOutcome::Full(v)) => {
            let total = v.components.len() + usize::from(v.embedded.is_some());
            let ok = v.intersection_equals_ideal && v.hull_matches && v.irredundant.iter().all(|&b| b);
            Check::new(
                name,
                ok,
                format!("{total} components over F_{prime} (ζ = {}) intersect to I, none redundant", v.zeta),
            )
        }
        Ok(VerificationOutcome::SpecialCase(v)) => Check::new(
            name,
            true,
            format!(
                "over F_{prime}: 𝔞^{} ⊆ S(I) ⊆ 𝔞 and S(I) ≠ I, so {} primary components",
                v.least_power, v.components
            ),
        ),
        Err(e @ (DecompError::BadPrime { .. } | DecompError::Oracle(_))) => return Err(e.into()),
        Err(e) => Check::new(name, false, e.to_string()),
    })
}

pub fn verify(p: &PcbMatrix, field: FieldChoice, level: Level) -> Result<Outcome, CliError> {
    let prime_field = match field {
        FieldChoice::Prime(prime) => Some(PrimeField::new(prime)?),
        _ => None,
    };
    let mut checks = identity_checks(p);
    if level == Level::Full {
        match (field, prime_field) {
            (FieldChoice::Prime(prime), Some(f)) => {
                // runs first so a bad prime stops before the oracle work
                let full = full_decomposition(p, prime)?;
                checks.extend(oracle_checks(p, f));
                checks.push(full);
            }
            _ => {
                checks.extend(oracle_checks(p, Rationals));
                checks.push(Check::skipped("full_decomposition", "needs fp:<p> with p = 1 mod d_{n-1}"));
            }
        }
    }
    let failed: Vec<String> = checks.iter().filter(|c| c.status == "fail").map(|c| c.name.to_string()).collect();
    let list: Vec<Value> =
        checks.iter().map(|c| json!({ "name": c.name, "status": c.status, "detail": c.detail })).collect();
    let payload = json!({
        "field": field.label(),
        "level": match level { Level::Identities => "identities", Level::Full => "full" },
        "passed": failed.is_empty(),
        "checks": list,
    });
    Ok(Outcome { payload, failed })
}
