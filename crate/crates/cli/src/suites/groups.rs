use ncsphere_core::permgroup::{
    adjacency_witness, generated_group, parametrize_level, twist_vanish_degree, CoarseningMode,
    FilteredFamily, Permutation, MAX_SEARCH_LEVEL,
};
use ncsphere_core::relspan::{saturation_probe, ProbeOutcome};
use serde_json::json;

use super::{guarded, Case};
use crate::config::SuiteConfig;
use crate::report::Outcome;

/// Default top level of the adjacency search; `--explore` raises it.
const ADJACENCY_LEVEL: usize = 5;
/// Closures of single generators are run up to this level. The closure
/// only reaches (21) or (321) through level k + 1, so k also stays below
/// the cap.
const CLOSURE_LEVEL: usize = 5;

/// Known elements of the groups generated from four sample permutations.
const HIGHLIGHTS: [(&str, &str); 4] = [
    ("(231)", "(2143)"),
    ("(3412)", "(52143)"),
    ("(2413)", "(4321)"),
    ("(42513)", "(435621)"),
];

type Maker = fn(usize) -> FilteredFamily;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn non_identity(k: usize) -> impl Iterator<Item = Permutation> {
    Permutation::all(k).into_iter().filter(|p| !p.is_identity())
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("valid permutation literal")
}

pub fn adjacency_cases(config: &SuiteConfig) -> Vec<Case> {
    let top = if config.explore {
        MAX_SEARCH_LEVEL
    } else {
        ADJACENCY_LEVEL
    };
    let mut out = Vec::new();
    for k in 2..=top {
        for sigma in non_identity(k) {
            let s = sigma.clone();
            out.push(Case::new(
                format!("adjacency-witness/k{k}/{sigma}"),
                format!("<1⊗σ, σ⊗1> contains τ ≠ id with an adjacent pair, σ = {sigma}"),
                move || {
                    guarded(|| {
                        Ok(match adjacency_witness(&s)? {
                            Some(w) => Outcome::check(
                                true,
                                json!({
                                    "tau": w.tau.to_string(),
                                    "word": w.word_text(),
                                    "depth": w.depth,
                                    "position": w.position,
                                    "reduction": w.reduction.to_string(),
                                    "productive": w.productive,
                                    "group_order": w.group_order,
                                }),
                            ),
                            None => {
                                Outcome::check(false, json!("no element with an adjacent pair"))
                            }
                        })
                    })
                },
            ));
        }
    }
    let expected: Vec<usize> = (2..=top).map(|k| factorial(k) - 1).collect();
    let computed = out.len();
    out.push(Case::new(
        "adjacency-witness/count",
        format!("one search per non-identity permutation of S_2..S_{top}"),
        move || {
            Outcome::check(
                computed == expected.iter().sum::<usize>(),
                json!({ "cases": computed, "per_level": expected }),
            )
        },
    ));
    for (sigma, tau) in HIGHLIGHTS {
        out.push(Case::new(
            format!("adjacency-witness/highlight/{sigma}"),
            format!("{tau} is generated from σ = {sigma}"),
            move || guarded(|| highlight(&perm(sigma), &perm(tau))),
        ));
    }
    out
}

/// `tau` lies in `<1⊗σ, σ⊗1>`, or, when it has the size of σ, in `<σ>`
/// with `tau ⊗ 1` in `<1⊗σ, σ⊗1>`.
fn highlight(sigma: &Permutation, tau: &Permutation) -> ncsphere_core::Result<Outcome> {
    let k = sigma.size();
    let one = Permutation::identity(1);
    let big = generated_group(&[one.tensor(sigma), sigma.tensor(&one)], k + 1)?;
    let (member, lifted) = if tau.size() == k {
        let small = generated_group(std::slice::from_ref(sigma), k)?;
        (small.contains(tau), big.contains(&tau.tensor(&one)))
    } else {
        (big.contains(tau), true)
    };
    let found = adjacency_witness(sigma)?.map(|w| w.tau.to_string());
    Ok(Outcome::check(
        member && lifted,
        json!({ "element": tau.to_string(), "member": member && lifted, "search_witness": found }),
    ))
}

pub fn parametrization_cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for k in 2..=config.cap {
        out.push(Case::new(
            format!("parametrization/k{k}/all-coarsenings"),
            format!(
                "only the identity of S_{k} has all coarsenings of its pairing with signature +1"
            ),
            move || {
                guarded(|| {
                    let set = parametrize_level(k, CoarseningMode::AllCoarsenings)?;
                    let ok = set.len() == 1 && set.iter().all(Permutation::is_identity);
                    Ok(Outcome::check(ok, json!({ "size": set.len() })))
                })
            },
        ));
        out.push(Case::new(
            format!("parametrization/k{k}/two-block"),
            format!("the σ in S_{k} whose two-block coarsenings all have signature +1 are the parity-preserving ones"),
            move || {
                guarded(|| {
                    let set = parametrize_level(k, CoarseningMode::TwoBlock)?;
                    let expected = factorial(k.div_ceil(2)) * factorial(k / 2);
                    let parity = set.iter().all(Permutation::is_half_liberated);
                    Ok(Outcome::check(
                        set.len() == expected && parity,
                        json!({ "size": set.len(), "expected": expected, "parity_preserving": parity }),
                    ))
                })
            },
        ));
    }
    out
}

pub fn vanish_cases(config: &SuiteConfig) -> Vec<Case> {
    (2..=config.cap)
        .map(|k| {
            Case::new(
                format!("vanish-degree/k{k}"),
                format!("every σ ≠ id in S_{k} has a coarsening with signature -1 and at most 3 blocks"),
                move || {
                    guarded(|| {
                        let mut counts = [0usize; 3];
                        let mut example = None;
                        for sigma in non_identity(k) {
                            match twist_vanish_degree(&sigma)? {
                                Some(v) if (1..=2).contains(&v.degree) => {
                                    counts[v.degree] += 1;
                                    if v.degree == 2 && example.is_none() {
                                        example = Some(json!({ "sigma": sigma.to_string(), "coarsening": v.witness }));
                                    }
                                }
                                other => {
                                    return Ok(Outcome::check(
                                        false,
                                        json!({ "sigma": sigma.to_string(), "degree": other.map(|v| v.degree) }),
                                    ))
                                }
                            }
                        }
                        Ok(Outcome::check(
                            true,
                            json!({ "degree_1": counts[1], "degree_2": counts[2], "degree_2_example": example }),
                        ))
                    })
                },
            )
        })
        .collect()
}

pub fn saturation_cases(config: &SuiteConfig) -> Vec<Case> {
    let cap = config.cap;
    let mut out = Vec::new();
    let standard: [(&str, Maker); 3] = [
        ("trivial", FilteredFamily::trivial),
        ("half-liberated", FilteredFamily::half_liberated),
        ("full", FilteredFamily::full),
    ];
    for (name, make) in standard {
        out.push(
            Case::new(
                format!("weak-saturation/fixpoint/{name}"),
                format!("the {name} filtered group is weakly saturated up to level {cap}"),
                move || {
                    let g = make(cap);
                    let closed = g.weak_saturation_closure();
                    Outcome::check(
                        closed == g && g.is_weakly_saturated(),
                        json!({ "level_sizes": g.level_sizes() }),
                    )
                },
            )
            .cached(),
        );
    }
    let (crossing, half) = (perm("(21)"), perm("(321)"));
    for k in 2..=CLOSURE_LEVEL.min(cap - 1) {
        for sigma in non_identity(k) {
            let (s, c, h) = (sigma.clone(), crossing.clone(), half.clone());
            out.push(
                Case::new(
                    format!("weak-saturation/closure/k{k}/{sigma}"),
                    format!("the weak saturation of <{sigma}> contains (21) or (321)"),
                    move || {
                        guarded(|| {
                            let closed = FilteredFamily::generated_by(cap, std::slice::from_ref(&s))?
                                .weak_saturation_closure();
                            let contains = [&c, &h]
                                .into_iter()
                                .filter(|p| closed.contains(p))
                                .map(ToString::to_string)
                                .collect::<Vec<_>>();
                            Ok(Outcome::check(
                                !contains.is_empty(),
                                json!({ "contains": contains, "level_sizes": closed.level_sizes() }),
                            ))
                        })
                    },
                )
                .cached(),
            );
        }
    }
    let (n, degree, seed) = (config.n, config.degree, config.seed);
    for (name, make, expect_hold) in [
        (
            "half-liberated",
            FilteredFamily::half_liberated as Maker,
            false,
        ),
        ("full", FilteredFamily::full, true),
    ] {
        let c = crossing.clone();
        out.push(
            Case::new(
                format!("weak-saturation/probe/{name}"),
                format!(
                    "the commutation relations {} from the {name} family's sphere relations",
                    if expect_hold {
                        "follow"
                    } else {
                        "do not follow"
                    }
                ),
                move || {
                    guarded(|| {
                        let outcome = saturation_probe(&make(cap), &c, false, n, degree, seed)?;
                        let ok = match &outcome {
                            ProbeOutcome::HoldsAtDegree { .. } => expect_hold,
                            ProbeOutcome::FailsWithWitness { .. } => !expect_hold,
                            ProbeOutcome::Undetermined { .. } => false,
                        };
                        Ok(Outcome::check(
                            ok,
                            serde_json::to_value(&outcome).expect("serializable"),
                        ))
                    })
                },
            )
            .cached(),
        );
    }
    out
}
