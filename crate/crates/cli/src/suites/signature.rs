use ncsphere_core::exact::{int, NcAlgebra};
use ncsphere_core::models::{clifford_model, rational_sphere_point};
use ncsphere_core::partition::{Partition, Sign};
use ncsphere_core::permgroup::Permutation;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{guarded, Case};
use crate::config::SuiteConfig;
use crate::report::Outcome;

const CLIFFORD_PAIRS: usize = 500;

/// Parity from the cycle decomposition, independent of inversion counting.
fn cycle_sign(p: &Permutation) -> Sign {
    let map = p.zero_based();
    let mut seen = vec![false; map.len()];
    let mut cycles = 0;
    for start in 0..map.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = map[i];
        }
    }
    Sign::from_parity(map.len() - cycles)
}

fn pairing_case(k: usize) -> Case {
    Case::new(
        format!("signature-calculus/pairing/k{k}"),
        format!("the pairing partition of every σ in S_{k} has signature sgn(σ)"),
        move || {
            guarded(|| {
                let mut odd = 0;
                for sigma in Permutation::all(k) {
                    let sig = Partition::pair_partition(&sigma).signature()?;
                    let expected = cycle_sign(&sigma);
                    if sig != expected || Sign::from_parity(sigma.inversions()) != expected {
                        return Ok(Outcome::check(
                            false,
                            json!({ "counterexample": sigma.to_string() }),
                        ));
                    }
                    odd += usize::from(sig == Sign::Minus);
                }
                Ok(Outcome::check(
                    true,
                    json!({ "permutations": (1..=k).product::<usize>(), "odd": odd }),
                ))
            })
        },
    )
}

fn well_defined_case(points: usize) -> Case {
    Case::new(
        format!("signature-calculus/well-defined/p{points}"),
        format!("every switch path from an even partition on {points} points to a noncrossing one has the same parity"),
        move || {
            guarded(|| {
                let mut checked = 0;
                for p in Partition::singletons(points, 0).coarsenings().filter(Partition::is_even) {
                    let levels = p.switch_levels();
                    let sig = p.signature()?;
                    if levels.iter().any(|&d| Sign::from_parity(d) != sig) {
                        return Ok(Outcome::check(
                            false,
                            json!({ "partition": p.to_string(), "levels": levels }),
                        ));
                    }
                    checked += 1;
                }
                Ok(Outcome::check(true, json!({ "even_partitions": checked })))
            })
        },
    )
}

fn clifford_case(seed: u64) -> Case {
    Case::new(
        "signature-calculus/clifford-oracle",
        "the twisted sign of x_{i_1}…x_{i_k} = ±x_{i_σ(1)}…x_{i_σ(k)} matches anticommuting Clifford generators",
        move || {
            guarded(|| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let xs = clifford_model(3, &rational_sphere_point(3, seed))?;
                let product = |ix: &[usize]| ix.iter().fold(xs[0].one_like(), |acc, &i| acc.mul(&xs[i - 1]));
                let mut minus = 0;
                for _ in 0..CLIFFORD_PAIRS {
                    let k = rng.gen_range(1..=4);
                    let mut images: Vec<usize> = (1..=k).collect();
                    images.shuffle(&mut rng);
                    let sigma = Permutation::new(&images)?;
                    let idx: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
                    let moved: Vec<usize> = (1..=k).map(|j| idx[sigma.image(j) - 1]).collect();
                    let sign = Partition::kernel(&idx, &moved).signature()?;
                    minus += usize::from(sign == Sign::Minus);
                    if product(&idx) != NcAlgebra::scale(&product(&moved), &int(sign.value())) {
                        return Ok(Outcome::check(
                            false,
                            json!({ "sigma": sigma.to_string(), "indices": idx, "sign": sign.to_string() }),
                        ));
                    }
                }
                Ok(Outcome::check(true, json!({ "pairs": CLIFFORD_PAIRS, "minus_signs": minus })))
            })
        },
    )
}

pub fn cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out: Vec<Case> = (1..=config.cap).map(pairing_case).collect();
    out.extend([2, 4, 6, 8].map(well_defined_case));
    out.push(clifford_case(config.seed));
    out
}
