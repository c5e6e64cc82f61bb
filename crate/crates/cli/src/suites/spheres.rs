use ncsphere_core::models::{
    clifford_point, complex_polygonal_point, halflib_point, independence_rank, polygonal_point,
    ModelPoint,
};
use ncsphere_core::relspan::{
    intersect_equal, Field, Letter, SphereClass, SpherePresentation, Word, WordCombo,
};
use serde_json::json;

use super::{guarded, Case};
use crate::config::SuiteConfig;
use crate::report::Outcome;

/// (a, b, a ∩ b, degree of the intersection).
const INTERSECTIONS: [(SphereClass, SphereClass, SphereClass, usize); 4] = [
    (
        SphereClass::Classical,
        SphereClass::Twisted,
        SphereClass::Classical,
        1,
    ),
    (
        SphereClass::Classical,
        SphereClass::TwistedHalf,
        SphereClass::Classical,
        2,
    ),
    (
        SphereClass::Half,
        SphereClass::Twisted,
        SphereClass::Twisted,
        2,
    ),
    (
        SphereClass::Half,
        SphereClass::TwistedHalf,
        SphereClass::Half,
        2,
    ),
];

/// Seeds drawn per support set when sampling models.
const SEEDS_PER_SUPPORT: u64 = 4;
/// The unit circle has a single support set and needs more points.
const CIRCLE_SEEDS: u64 = 12;

pub fn intersection_cases(config: &SuiteConfig) -> Vec<Case> {
    let (n, degree) = (config.n, config.degree);
    let mut out = Vec::new();
    for field in [Field::Real, Field::Complex] {
        for (a, b, meet, d) in INTERSECTIONS {
            out.push(
                Case::new(
                    format!(
                        "sphere-intersections/{}/{}+{}",
                        field.name(),
                        a.name(),
                        b.name()
                    ),
                    format!(
                        "the {} {} and {} spheres meet in the {} polygonal sphere with d = {d}",
                        field.name(),
                        a.name(),
                        b.name(),
                        meet.name()
                    ),
                    move || {
                        guarded(|| {
                            let pa = SpherePresentation::sphere(field, a, n, n)?;
                            let pb = SpherePresentation::sphere(field, b, n, n)?;
                            let expected = SpherePresentation::sphere(field, meet, d, n)?;
                            let union = pa.union(&pb)?;
                            let v = intersect_equal(&pa, &pb, &expected, degree)?;
                            if let Some(id) = v.first_failure() {
                                return Ok(Outcome::check(
                                    false,
                                    json!({ "not_derived": id, "degree": degree }),
                                ));
                            }
                            let find = |pres: &SpherePresentation, id: &str| {
                                pres.relations()
                                    .into_iter()
                                    .find(|r| r.id == id)
                                    .map(|r| r.combo)
                            };
                            let sound = v.forward.iter().all(|(id, der)| {
                                find(&expected, id).is_some_and(|t| {
                                    der.certificate().is_some_and(|c| c.verify(&union, &t))
                                })
                            }) && v.backward.iter().all(|(id, der)| {
                                find(&union, id).is_some_and(|t| {
                                    der.certificate().is_some_and(|c| c.verify(&expected, &t))
                                })
                            });
                            Ok(Outcome::check(
                                sound,
                                json!({
                                    "equals": expected.label,
                                    "degree": degree,
                                    "forward": v.forward.len(),
                                    "backward": v.backward.len(),
                                    "certificate_terms": v.certificate_terms(),
                                    "certificates_verified": sound,
                                }),
                            ))
                        })
                    },
                )
                .cached(),
            );
        }
    }
    out
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn sample(
    n: usize,
    size: usize,
    seed: u64,
    per_support: u64,
    make: impl Fn(&[usize], u64) -> ncsphere_core::Result<ModelPoint>,
) -> ncsphere_core::Result<Vec<ModelPoint>> {
    let mut out = Vec::new();
    for s in subsets(n, size) {
        for i in 0..per_support {
            out.push(make(&s, seed.wrapping_add(i))?);
        }
    }
    Ok(out)
}

fn word(letters: &[(usize, bool)]) -> WordCombo {
    WordCombo::word(Word(
        letters
            .iter()
            .map(|&(i, star)| {
                if star {
                    Letter::starred(i)
                } else {
                    Letter::plain(i)
                }
            })
            .collect(),
    ))
}

fn plain(indices: &[usize]) -> WordCombo {
    WordCombo::word(Word::from_indices(indices))
}

fn rank_case(
    id: &str,
    claim: &str,
    expected: usize,
    functions: Vec<WordCombo>,
    samples: impl Fn() -> ncsphere_core::Result<Vec<ModelPoint>> + Send + Sync + 'static,
) -> Case {
    Case::new(id, claim, move || {
        guarded(|| {
            let models = samples()?;
            let rank = independence_rank(&functions, &models)?;
            Ok(Outcome::check(
                rank == expected,
                json!({ "rank": rank, "expected": expected, "functions": functions.len(), "samples": models.len() }),
            ))
        })
    })
}

pub fn independence_cases(config: &SuiteConfig) -> Vec<Case> {
    let seed = config.seed;
    let mut out = Vec::new();

    let circle = vec![
        word(&[(1, false), (1, true), (2, false)]),
        word(&[(2, false), (2, true), (1, false)]),
        word(&[(1, false), (1, false), (2, true)]),
        word(&[(2, false), (2, false), (1, true)]),
        word(&[(1, false), (1, true), (1, false)]),
        word(&[(2, false), (2, true), (2, false)]),
    ];
    out.push(rank_case(
        "independence/unit-circle-cubics",
        "|z1|²z2, |z2|²z1, z1²z̄2, z2²z̄1, |z1|²z1, |z2|²z2 are linearly independent on the complex unit circle",
        6,
        circle,
        move || sample(2, 2, seed, CIRCLE_SEEDS, |s, i| complex_polygonal_point(2, 2, s, i)),
    ));

    for n in [2usize, 3] {
        let mut functions = Vec::new();
        for a in 1..=n {
            for b in (1..=n).filter(|&b| b != a) {
                functions.push(plain(&[a, a, b]));
                functions.push(plain(&[a, b, a]));
            }
            functions.push(plain(&[a, a, a]));
        }
        out.push(rank_case(
            &format!("independence/half-liberated/n{n}"),
            &format!("x_a²x_b, x_ax_bx_a (a ≠ b) and x_a³ are linearly independent on the half-liberated sphere with d = 2, N = {n}"),
            2 * n * (n - 1) + n,
            functions,
            move || sample(n, 2, seed, SEEDS_PER_SUPPORT, |s, i| halflib_point(&complex_polygonal_point(n, 2, s, i)?)),
        ));
    }

    let quadratics: Vec<WordCombo> = (1..=3)
        .flat_map(|i| (i..=3).map(move |j| plain(&[i, j])))
        .collect();
    out.push(rank_case(
        "independence/classical-quadratics",
        "x_ix_j (i ≤ j) are linearly independent on the classical polygonal sphere with d = 2, N = 3",
        6,
        quadratics,
        move || sample(3, 2, seed, SEEDS_PER_SUPPORT, |s, i| polygonal_point(3, 2, s, i)),
    ));

    let squares: Vec<WordCombo> = (1..=3)
        .flat_map(|a| {
            (1..=3)
                .filter(move |&b| b != a)
                .map(move |b| plain(&[a, a, b]))
        })
        .collect();
    out.push(rank_case(
        "independence/clifford-cubics",
        "x_a²x_b (a ≠ b) are linearly independent on the twisted polygonal sphere with d = 2, N = 3",
        6,
        squares,
        move || sample(3, 2, seed, SEEDS_PER_SUPPORT, |s, i| clifford_point(3, s, i)),
    ));

    out.push(Case::new(
        "independence/twisted-half",
        "independence of cubic monomials on the twisted half-liberated sphere",
        || Outcome::skip("no finite model of the twisted half-liberated sphere is implemented; the result is taken from the literature"),
    ));
    out
}
