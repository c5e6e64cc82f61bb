use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{
    clifford_point, complex_polygonal_point, evaluate, halflib_point, polygonal_point, ModelPoint,
};
use crate::permgroup::{FilteredFamily, Permutation};

use super::presentation::{instantiate_relations, Family, Field, SpherePresentation};
use super::span::IdealSpan;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ProbeOutcome {
    HoldsAtDegree { degree: usize },
    FailsWithWitness { relation: String, model: String },
    Undetermined { degree: usize, relation: String },
}

/// Candidate models used to refute non-derivable relations.
fn candidate_models(n: usize, seed: u64) -> Vec<ModelPoint> {
    let mut out = Vec::new();
    let all: Vec<usize> = (1..=n).collect();
    if let Ok(p) = polygonal_point(n, n, &all, seed) {
        out.push(p);
    }
    if let Ok(p) = clifford_point(n, &all, seed) {
        out.push(p);
    }
    let pair: Vec<usize> = (1..=n.min(2)).collect();
    if let Ok(z) = complex_polygonal_point(n, pair.len(), &pair, seed) {
        if let Ok(p) = halflib_point(&z) {
            out.push(p);
        }
    }
    out
}

/// Are the relations of σ derivable, at degree `degree`, from the relations
/// of every element of G up to that degree?
pub fn saturation_probe(
    g: &FilteredFamily,
    sigma: &Permutation,
    twisted: bool,
    n: usize,
    degree: usize,
    seed: u64,
) -> Result<ProbeOutcome> {
    if sigma.size() > degree {
        return Err(Error::DegreeOverflow {
            degree: sigma.size(),
            bound: degree,
        });
    }
    let families: Vec<Family> = g
        .levels()
        .range(..=degree)
        .flat_map(|(_, set)| set.iter())
        .filter(|p| !p.is_identity())
        .map(|p| Family::new(p.clone(), twisted))
        .collect();
    let pres = SpherePresentation::with_families(Field::Real, n, families, "probe")?;
    let span = IdealSpan::build(&pres, degree)?;
    let targets = instantiate_relations(sigma, twisted, Field::Real, n);
    let Some(missing) = targets
        .iter()
        .map(|r| span.derives(&r.combo).map(|d| (r, d)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .find(|(_, d)| !d.is_derived())
        .map(|(r, _)| r)
    else {
        return Ok(ProbeOutcome::HoldsAtDegree { degree });
    };
    let generators = pres.relations();
    for model in candidate_models(n, seed) {
        let satisfies = generators
            .iter()
            .map(|r| evaluate(&r.combo, &model).map(|v| v.is_zero()))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|ok| ok);
        if !satisfies {
            continue;
        }
        for r in &targets {
            if !evaluate(&r.combo, &model)?.is_zero() {
                return Ok(ProbeOutcome::FailsWithWitness {
                    relation: r.id.clone(),
                    model: model.describe(),
                });
            }
        }
    }
    Ok(ProbeOutcome::Undetermined {
        degree,
        relation: missing.id.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn full_family_derives_everything() {
        let g = FilteredFamily::full(4);
        for s in ["(21)", "(321)", "(2413)"] {
            let out = saturation_probe(&g, &perm(s), false, 3, 4, 0).unwrap();
            assert_eq!(out, ProbeOutcome::HoldsAtDegree { degree: 4 });
        }
    }

    #[test]
    fn half_liberated_family_misses_the_crossing() {
        let g = FilteredFamily::generated_by(6, &[perm("(321)")]).unwrap();
        match saturation_probe(&g, &perm("(21)"), false, 3, 4, 0).unwrap() {
            ProbeOutcome::FailsWithWitness { model, .. } => {
                assert!(model.contains("half-liberated"))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn identity_always_holds() {
        let g = FilteredFamily::trivial(4);
        let out = saturation_probe(&g, &Permutation::identity(3), false, 3, 4, 0).unwrap();
        assert_eq!(out, ProbeOutcome::HoldsAtDegree { degree: 4 });
        assert!(saturation_probe(&g, &Permutation::identity(5), false, 3, 4, 0).is_err());
    }
}
