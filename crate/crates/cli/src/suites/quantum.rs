use ncsphere_core::exact::{Matrix, Scalar};
use ncsphere_core::models::free_product_check;
use ncsphere_core::partition::Partition;
use ncsphere_core::qcheck::{
    check_coaction, check_identities, check_matrix, intertwines, is_monomial, leg_bent_matrix,
    partition_compose, pythagorean_rotation, random_orthogonal, rotate_partition,
    signed_permutation_matrices, tpi_matrix, vanishing_diagram, CheckOutcome, Entry, Identity,
    QuantumMatrix, RelationSetId,
};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{guarded, Case};
use crate::config::SuiteConfig;
use crate::report::Outcome;

/// Signed permutation enumeration stops here (N! · 2^N matrices).
const MAX_SIGNED_N: usize = 4;
/// Partitions with at most this many points per row enter the composition check.
const COMPOSE_ROW: usize = 3;

fn q(m: &Matrix<Scalar>) -> ncsphere_core::Result<QuantumMatrix<Scalar>> {
    QuantumMatrix::from_matrix(m)
}

fn violation(outcome: CheckOutcome) -> Option<String> {
    match outcome {
        CheckOutcome::Pass => None,
        CheckOutcome::Violation { identity } => Some(identity),
    }
}

fn signed_guard(n: usize) -> ncsphere_core::Result<Vec<Matrix<Scalar>>> {
    if n > MAX_SIGNED_N {
        return Err(ncsphere_core::Error::Budget {
            required: (1..=n).product::<usize>() << n,
            budget: (1..=MAX_SIGNED_N).product::<usize>() << MAX_SIGNED_N,
        });
    }
    Ok(signed_permutation_matrices(n))
}

fn samples(
    config: &SuiteConfig,
    n: usize,
    salt: u64,
) -> ncsphere_core::Result<Vec<Matrix<Scalar>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ salt);
    (0..config.samples)
        .map(|_| random_orthogonal(n, &mut rng))
        .collect()
}

/// `a b1 b2 c = 0` for a ≠ c on a common row or column.
fn long_vanishing(n: usize) -> Vec<Identity> {
    let entries: Vec<Entry> = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| Entry::new(r, c)))
        .collect();
    let mut out = Vec::new();
    for &a in &entries {
        for &c in entries
            .iter()
            .filter(|c| **c != a && (c.row == a.row || c.col == a.col))
        {
            for &b1 in &entries {
                for &b2 in &entries {
                    out.push(Identity {
                        terms: vec![(One::one(), vec![a, b1, b2, c])],
                    });
                }
            }
        }
    }
    out
}

fn signed_relation_cases(config: &SuiteConfig) -> Vec<Case> {
    let n = config.n;
    let mut out = Vec::new();
    for id in [
        RelationSetId::H,
        RelationSetId::Obar,
        RelationSetId::Hinf,
        RelationSetId::Hstar,
    ] {
        out.push(Case::new(
            format!("quantum-relations/signed-permutations/{id}"),
            format!("every signed permutation matrix of size {n} satisfies the {id} relations"),
            move || {
                guarded(|| {
                    let mats = signed_guard(n)?;
                    for m in &mats {
                        if let Some(identity) = violation(check_matrix(&q(m)?, id)) {
                            return Ok(Outcome::check(
                                false,
                                json!({ "matrix": m.to_string(), "violated": identity }),
                            ));
                        }
                    }
                    Ok(Outcome::check(true, json!({ "matrices": mats.len() })))
                })
            },
        ));
    }
    out.push(Case::new(
        "quantum-relations/signed-permutations/coaction",
        format!("every signed permutation matrix of size {n} satisfies the five coaction relation families"),
        move || {
            guarded(|| {
                let mats = signed_guard(n)?;
                for m in &mats {
                    if let Some(identity) = violation(check_coaction(&q(m)?)?) {
                        return Ok(Outcome::check(false, json!({ "matrix": m.to_string(), "violated": identity })));
                    }
                }
                Ok(Outcome::check(true, json!({ "matrices": mats.len() })))
            })
        },
    ));
    out
}

fn monomial_cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    out.push(Case::new(
        "quantum-relations/monomial/signed-permutations",
        "signed permutation matrices of size at most 4 are monomial and satisfy the twisted orthogonal relations",
        || {
            guarded(|| {
                let mut count = 0;
                for n in 1..=MAX_SIGNED_N {
                    for m in signed_permutation_matrices(n) {
                        if !is_monomial(&m) || !check_matrix(&q(&m)?, RelationSetId::Obar).passed() {
                            return Ok(Outcome::check(false, json!({ "matrix": m.to_string() })));
                        }
                        count += 1;
                    }
                }
                Ok(Outcome::check(true, json!({ "matrices": count })))
            })
        },
    ));
    for n in [2usize, 3] {
        let config = config.clone();
        out.push(Case::new(
            format!("quantum-relations/monomial/random-orthogonal/n{n}"),
            format!("a rational orthogonal matrix of size {n} satisfies the twisted orthogonal relations iff it is monomial"),
            move || {
                guarded(|| {
                    let mats = samples(&config, n, n as u64)?;
                    let mut monomial = 0;
                    for m in &mats {
                        let mono = is_monomial(m);
                        monomial += usize::from(mono);
                        if check_matrix(&q(m)?, RelationSetId::Obar).passed() != mono {
                            return Ok(Outcome::check(false, json!({ "matrix": m.to_string(), "monomial": mono })));
                        }
                    }
                    Ok(Outcome::check(true, json!({ "samples": mats.len(), "monomial": monomial })))
                })
            },
        ));
    }
    let config = config.clone();
    out.push(Case::new(
        "quantum-relations/monomial/twisted-half",
        "non-monomial rational orthogonal matrices of size 3 violate the twisted half-liberated relations",
        move || {
            guarded(|| {
                let mats = samples(&config, 3, 0x7a)?;
                let mut refuted = 0;
                for m in mats.iter().filter(|m| !is_monomial(m)) {
                    if check_matrix(&q(m)?, RelationSetId::Obarstar).passed() {
                        return Ok(Outcome::check(false, json!({ "matrix": m.to_string() })));
                    }
                    refuted += 1;
                }
                Ok(Outcome::check(true, json!({ "samples": mats.len(), "non_monomial": refuted })))
            })
        },
    ));
    out
}

fn diagram_cases(config: &SuiteConfig) -> Vec<Case> {
    let n = config.n;
    let mut out = Vec::new();
    for (name, rotated) in [("pi", false), ("sigma", true)] {
        out.push(Case::new(
            format!("quantum-relations/intertwiner/{name}"),
            format!(
                "T_{name} intertwines U^⊗3 for every signed permutation U of size {n} and not for a rotation"
            ),
            move || {
                guarded(|| {
                    let pi = vanishing_diagram();
                    let p = if rotated { rotate_partition(&pi)? } else { pi };
                    let mats = signed_guard(n)?;
                    for m in &mats {
                        if let Some(v) = violation(intertwines(&p, m)?) {
                            return Ok(Outcome::check(false, json!({ "matrix": m.to_string(), "violated": v })));
                        }
                    }
                    let rotation = violation(intertwines(&p, &pythagorean_rotation(n))?);
                    Ok(Outcome::check(
                        rotation.is_some(),
                        json!({ "partition": p.to_string(), "matrices": mats.len(), "rotation_violation": rotation }),
                    ))
                })
            },
        ));
    }
    out.push(Case::new(
        "quantum-relations/leg-bending",
        format!("rotating the vanishing diagram agrees with bending legs of T_pi, N = {n}"),
        move || {
            guarded(|| {
                let pi = vanishing_diagram();
                let sigma = rotate_partition(&pi)?;
                let ok = leg_bent_matrix(&pi, n)? == tpi_matrix(&sigma, n)?;
                Ok(Outcome::check(ok, json!({ "sigma": sigma.to_string() })))
            })
        },
    ));
    for n in [2usize, 3] {
        out.push(
            Case::new(
                format!("quantum-relations/composition/n{n}"),
                format!("T_q T_p = N^loops T_(q∘p) for all partitions with at most {COMPOSE_ROW} points per row, N = {n}"),
                move || guarded(|| composition(n)),
            )
            .cached(),
        );
    }
    out
}

fn composition(n: usize) -> ncsphere_core::Result<Outcome> {
    use std::collections::HashMap;
    let mut t: HashMap<Partition, Matrix<i64>> = HashMap::new();
    let mut all = Vec::new();
    for k in 0..=COMPOSE_ROW {
        for l in 0..=COMPOSE_ROW {
            let ps: Vec<Partition> = Partition::singletons(k, l).coarsenings().collect();
            for p in &ps {
                t.insert(p.clone(), tpi_matrix(p, n)?);
            }
            all.push(((k, l), ps));
        }
    }
    let mut pairs = 0usize;
    for ((_, l), ps) in &all {
        for ((l2, _), qs) in &all {
            if l != l2 {
                continue;
            }
            for p in ps {
                for qq in qs {
                    let (r, loops) = partition_compose(p, qq)?;
                    let lhs = t[qq].try_mul(&t[p])?;
                    let rhs = t[&r].scale(&(n as i64).pow(loops as u32));
                    if lhs != rhs {
                        return Ok(Outcome::check(
                            false,
                            json!({ "p": p.to_string(), "q": qq.to_string() }),
                        ));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(Outcome::check(true, json!({ "pairs": pairs })))
}

fn group_dual_cases() -> Vec<Case> {
    (1..=MAX_SIGNED_N)
        .map(|n| {
            Case::new(
                format!("quantum-relations/group-dual/n{n}"),
                format!("u_ij = δ_ij g_i over the free product of {n} copies of Z_2 satisfies the vanishing and coaction relations"),
                move || {
                    guarded(|| {
                        let u = QuantumMatrix::group_dual(n)?;
                        let mut failures: Vec<Value> = Vec::new();
                        if let Some(v) = violation(check_matrix(&u, RelationSetId::Hinf)) {
                            failures.push(json!(v));
                        }
                        if n >= 3 {
                            if let Some(v) = violation(check_coaction(&u)?) {
                                failures.push(json!(v));
                            }
                        }
                        let mut triples = 0;
                        for i in 1..=n {
                            for j in 1..=n {
                                for k in 1..=n {
                                    let distinct = i != j && j != k && i != k;
                                    if free_product_check(i, j, k) == distinct {
                                        failures.push(json!({ "triple": [i, j, k] }));
                                    }
                                    triples += 1;
                                }
                            }
                        }
                        Ok(Outcome::check(failures.is_empty(), json!({ "triples": triples, "failures": failures })))
                    })
                },
            )
        })
        .collect()
}

fn checker_consistency_cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let cfg = config.clone();
    out.push(Case::new(
        "quantum-relations/containment",
        "matrices satisfying H satisfy the vanishing relations abc = 0, which imply a b1 b2 c = 0",
        move || {
            guarded(|| {
                let mut mats = signed_permutation_matrices(3);
                mats.extend(samples(&cfg, 3, 0xc0)?.into_iter().take(100));
                let long = long_vanishing(3);
                let mut vanishing = 0;
                for m in &mats {
                    let u = q(m)?;
                    let h = check_matrix(&u, RelationSetId::H).passed();
                    let inf = check_matrix(&u, RelationSetId::Hinf).passed();
                    if (h && !inf) || (inf && !check_identities(&u, &long).passed()) {
                        return Ok(Outcome::check(false, json!({ "matrix": m.to_string() })));
                    }
                    vanishing += usize::from(inf);
                }
                Ok(Outcome::check(
                    true,
                    json!({ "matrices": mats.len(), "vanishing": vanishing }),
                ))
            })
        },
    ));
    let cfg = config.clone();
    out.push(Case::new(
        "quantum-relations/complex-reduction",
        "on real matrices the complex and real twisted checkers agree",
        move || {
            guarded(|| {
                let mut mats = signed_permutation_matrices(2);
                mats.extend(samples(&cfg, 2, 0xc1)?.into_iter().take(100));
                for m in &mats {
                    let u = q(m)?;
                    if check_matrix(&u, RelationSetId::Ubar).passed()
                        != check_matrix(&u, RelationSetId::Obar).passed()
                    {
                        return Ok(Outcome::check(false, json!({ "matrix": m.to_string() })));
                    }
                }
                Ok(Outcome::check(true, json!({ "matrices": mats.len() })))
            })
        },
    ));
    out
}

pub fn cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out = signed_relation_cases(config);
    out.extend(monomial_cases(config));
    out.extend(diagram_cases(config));
    out.extend(group_dual_cases());
    out.extend(checker_consistency_cases(config));
    out
}
