use ncsphere_core::exact::{int, NcAlgebra, Rational};
use ncsphere_core::models::{
    clifford_model, clifford_point, complex_polygonal_point, evaluate, evaluate_word,
    halflib_point, independence_rank, polygonal_point, rational_sphere_point, ModelPoint,
};
use ncsphere_core::partition::Partition;
use ncsphere_core::permgroup::Permutation;
use ncsphere_core::relspan::{Field, IdealSpan, SphereClass, SpherePresentation, Word, WordCombo};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn all_models(n: usize, seed: u64) -> Vec<ModelPoint> {
    let mut out = Vec::new();
    for d in 1..=n {
        for s in subsets(n, d) {
            out.push(polygonal_point(n, d, &s, seed).unwrap());
            out.push(complex_polygonal_point(n, d, &s, seed).unwrap());
            out.push(clifford_point(n, &s, seed).unwrap());
            if d <= 2 {
                out.push(halflib_point(&complex_polygonal_point(n, d, &s, seed).unwrap()).unwrap());
            }
        }
    }
    out
}

#[test]
fn models_satisfy_their_presentations() {
    for model in all_models(3, 5) {
        for rel in model.presentation().relations() {
            assert!(
                evaluate(&rel.combo, &model).unwrap().is_zero(),
                "{} at {}",
                rel.id,
                model.describe()
            );
        }
    }
}

#[test]
fn half_liberated_models_half_commute() {
    for n in 1..=4 {
        for d in 1..=2.min(n) {
            for s in subsets(n, d) {
                let model = halflib_point(&complex_polygonal_point(n, d, &s, 9).unwrap()).unwrap();
                for i in 1..=n {
                    for j in 1..=n {
                        for k in 1..=n {
                            let lhs =
                                evaluate_word(&Word::from_indices(&[i, j, k]), &model).unwrap();
                            let rhs =
                                evaluate_word(&Word::from_indices(&[k, j, i]), &model).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

/// The sign of the twisted relation read off the kernel signature agrees
/// with the sign produced by anticommuting Clifford generators.
#[test]
fn clifford_sign_matches_signature() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let lambda: Vec<Rational> = rational_sphere_point(3, 11);
    let xs = clifford_model(3, &lambda).unwrap();
    for _ in 0..500 {
        let k = rng.gen_range(1..=4);
        let mut images: Vec<usize> = (1..=k).collect();
        images.shuffle(&mut rng);
        let sigma = Permutation::new(&images).unwrap();
        let idx: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
        let moved: Vec<usize> = (1..=k).map(|j| idx[sigma.image(j) - 1]).collect();
        let sign = Partition::kernel(&idx, &moved).signature().unwrap();
        let product = |ix: &[usize]| {
            ix.iter()
                .fold(xs[0].one_like(), |acc, &i| acc.mul(&xs[i - 1]))
        };
        assert_eq!(
            product(&idx),
            NcAlgebra::scale(&product(&moved), &int(sign.value())),
            "{sigma} on {idx:?}"
        );
    }
}

#[test]
fn clifford_squares_times_letters_are_independent() {
    let n = 3;
    let functions: Vec<WordCombo> = (1..=n)
        .flat_map(|a| {
            (1..=n)
                .filter(move |&b| b != a)
                .map(move |b| WordCombo::word(Word::from_indices(&[a, a, b])))
        })
        .collect();
    let samples: Vec<ModelPoint> = (0..8)
        .map(|s| clifford_point(n, &[1, 2, 3], s).unwrap())
        .collect();
    assert_eq!(
        independence_rank(&functions, &samples).unwrap(),
        n * (n - 1)
    );
}

#[test]
fn twisted_chain_is_derivable_and_vanishes_on_models() {
    let pres = SpherePresentation::sphere(Field::Real, SphereClass::Twisted, 3, 3).unwrap();
    let span = IdealSpan::build(&pres, 3).unwrap();
    let models: Vec<ModelPoint> = (0..3)
        .map(|s| clifford_point(3, &[1, 2, 3], s).unwrap())
        .collect();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                // abc + cba for distinct letters, aac - caa for a repeated one.
                let sign = match (a != b && b != c && a != c, a == b && b != c) {
                    (true, _) => 1,
                    (false, true) => -1,
                    _ => continue,
                };
                let mut combo = WordCombo::word(Word::from_indices(&[a, b, c]));
                combo.add_term(Word::from_indices(&[c, b, a]), int(sign));
                let derivation = span.derives(&combo).unwrap();
                assert!(derivation.is_derived(), "{combo}");
                assert!(derivation.certificate().unwrap().verify(&pres, &combo));
                for m in &models {
                    assert!(evaluate(&combo, m).unwrap().is_zero());
                }
            }
        }
    }
}

fn word_strategy() -> impl Strategy<Value = Word> {
    proptest::collection::vec(1usize..=3, 1..=3).prop_map(|v| Word::from_indices(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_is_monotone_in_samples(seeds in proptest::collection::vec(any::<u64>(), 1..6)) {
        let functions: Vec<WordCombo> = [[1, 1, 2], [1, 2, 1], [1, 1, 1], [2, 3, 3], [3, 1, 2]]
            .iter()
            .map(|w| WordCombo::word(Word::from_indices(w)))
            .collect();
        let samples: Vec<ModelPoint> = seeds
            .iter()
            .map(|&s| halflib_point(&complex_polygonal_point(3, 2, &[1, 2], s).unwrap()).unwrap())
            .collect();
        let mut last = 0;
        for len in 0..=samples.len() {
            let r = independence_rank(&functions, &samples[..len]).unwrap();
            prop_assert!(r >= last);
            last = r;
        }
    }

    #[test]
    fn derivable_combos_vanish_and_stay_derivable(
        class in prop::sample::select(vec![SphereClass::Classical, SphereClass::Twisted, SphereClass::Half]),
        w1 in word_strategy(),
        w2 in word_strategy(),
        c in -3i64..=3,
    ) {
        let pres = SpherePresentation::sphere(Field::Real, class, 3, 3).unwrap();
        let mut combo = WordCombo::word(w1);
        combo.add_term(w2, int(c));
        prop_assume!(!combo.is_zero());
        let low = IdealSpan::build(&pres, 3).unwrap().derives(&combo).unwrap();
        let high = IdealSpan::build(&pres, 4).unwrap().derives(&combo).unwrap();
        if low.is_derived() {
            prop_assert!(high.is_derived());
        }
        if high.is_derived() {
            prop_assert!(high.certificate().unwrap().verify(&pres, &combo));
            let models = match class {
                SphereClass::Classical => vec![polygonal_point(3, 3, &[1, 2, 3], 4).unwrap()],
                SphereClass::Twisted => vec![clifford_point(3, &[1, 2, 3], 4).unwrap()],
                _ => vec![halflib_point(&complex_polygonal_point(3, 2, &[2, 3], 4).unwrap()).unwrap()],
            };
            for m in &models {
                prop_assert!(evaluate(&combo, m).unwrap().is_zero());
            }
        }
    }
}
