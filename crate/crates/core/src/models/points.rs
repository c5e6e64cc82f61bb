use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{gauss, real, Rational, Scalar};

use super::{Coords, ModelKind, ModelPoint};

fn small_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=7);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Unit vector `(2t, 1 − |t|²)/(1 + |t|²)` from a random rational `t`,
/// redrawn until every coordinate is nonzero.
pub fn rational_sphere_point_with(m: usize, rng: &mut impl Rng) -> Vec<Rational> {
    assert!(m >= 1, "dimension must be positive");
    loop {
        let t: Vec<Rational> = (0..m - 1).map(|_| small_rational(rng)).collect();
        let norm: Rational = t.iter().map(|x| x * x).sum();
        let denom = Rational::one() + &norm;
        let mut x: Vec<Rational> = t.iter().map(|v| (v + v) / &denom).collect();
        x.push((Rational::one() - &norm) / &denom);
        if x.iter().all(|v| !v.is_zero()) {
            return x;
        }
    }
}

pub fn rational_sphere_point(m: usize, seed: u64) -> Vec<Rational> {
    rational_sphere_point_with(m, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn check_support(n: usize, d: usize, support: &[usize]) -> Result<BTreeSet<usize>> {
    let set: BTreeSet<usize> = support.iter().copied().collect();
    if set.len() != support.len() || set.len() != d || d > n {
        return Err(Error::SupportMismatch {
            expected: d,
            got: support.to_vec(),
        });
    }
    if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::LetterOutOfRange {
            index: bad,
            dimension: n,
        });
    }
    Ok(set)
}

/// A real point with zeros off `support`.
pub fn polygonal_point(n: usize, d: usize, support: &[usize], seed: u64) -> Result<ModelPoint> {
    let set = check_support(n, d, support)?;
    let x = rational_sphere_point(d, seed);
    let mut coords = vec![Scalar::zero(); n];
    for (i, v) in set.iter().zip(x) {
        coords[i - 1] = real(v);
    }
    Ok(ModelPoint {
        kind: ModelKind::ClassicalPoint,
        n,
        d,
        support: set,
        coords: Coords::Scalars(coords),
    })
}

/// `((1 − t²) + 2ti)/(1 + t²)` for random rational t.
fn unimodular(rng: &mut impl Rng) -> Scalar {
    let t = small_rational(rng);
    let denom = Rational::one() + &t * &t;
    gauss((Rational::one() - &t * &t) / &denom, (&t + &t) / &denom)
}

/// Gaussian-rational point: rational magnitudes on the support times
/// unimodular phases.
pub fn complex_polygonal_point(
    n: usize,
    d: usize,
    support: &[usize],
    seed: u64,
) -> Result<ModelPoint> {
    let set = check_support(n, d, support)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let magnitudes = rational_sphere_point_with(d, &mut rng);
    let mut coords = vec![Scalar::zero(); n];
    for (i, r) in set.iter().zip(magnitudes) {
        let phase = unimodular(&mut rng);
        coords[i - 1] = gauss(&phase.re * &r, &phase.im * &r);
    }
    Ok(ModelPoint {
        kind: ModelKind::ComplexPoint,
        n,
        d,
        support: set,
        coords: Coords::Scalars(coords),
    })
}
