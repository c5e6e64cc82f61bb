use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{int, rat, real, Matrix, Rational, Scalar};
use crate::permgroup::Permutation;

/// All `n! · 2^n` signed permutation matrices.
pub fn signed_permutation_matrices(n: usize) -> Vec<Matrix<Scalar>> {
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        for signs in 0..1usize << n {
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                let s = if signs >> i & 1 == 1 { -1 } else { 1 };
                m.set(p.zero_based()[i], i, real(int(s)));
            }
            out.push(m);
        }
    }
    out
}

/// The rotation with cosine 3/5 in the first two coordinates, identity on
/// the rest.
pub fn pythagorean_rotation(n: usize) -> Matrix<Scalar> {
    assert!(n >= 2, "needs two coordinates");
    let mut m = Matrix::identity(n);
    m.set(0, 0, real(rat(3, 5)));
    m.set(0, 1, real(rat(-4, 5)));
    m.set(1, 0, real(rat(4, 5)));
    m.set(1, 1, real(rat(3, 5)));
    m
}

fn from_rational(rows: Vec<Vec<Rational>>) -> Matrix<Scalar> {
    Matrix::from_rational_rows(rows).expect("square rows")
}

/// A random rational orthogonal matrix, N = 2 (stereographic angle) or N = 3
/// (rotation of a random integer quaternion), composed with a random sign.
pub fn random_orthogonal(n: usize, rng: &mut impl Rng) -> Result<Matrix<Scalar>> {
    let m = match n {
        2 => {
            let t = Rational::new(
                BigInt::from(rng.gen_range(-9i64..=9)),
                BigInt::from(rng.gen_range(1i64..=7)),
            );
            let d = Rational::one() + &t * &t;
            let c = (Rational::one() - &t * &t) / &d;
            let s = (&t + &t) / &d;
            if rng.gen_bool(0.5) {
                from_rational(vec![vec![c.clone(), -s.clone()], vec![s, c]])
            } else {
                from_rational(vec![vec![c.clone(), s.clone()], vec![s, -c]])
            }
        }
        3 => {
            let q: [i64; 4] = loop {
                let q = [0; 4].map(|_| rng.gen_range(-4i64..=4));
                if q.iter().any(|&x| x != 0) {
                    break q;
                }
            };
            let [a, b, c, d] = q;
            let norm = a * a + b * b + c * c + d * d;
            let e = |x: i64| Rational::new(BigInt::from(x), BigInt::from(norm));
            let mut m = from_rational(vec![
                vec![
                    e(a * a + b * b - c * c - d * d),
                    e(2 * (b * c - a * d)),
                    e(2 * (b * d + a * c)),
                ],
                vec![
                    e(2 * (b * c + a * d)),
                    e(a * a - b * b + c * c - d * d),
                    e(2 * (c * d - a * b)),
                ],
                vec![
                    e(2 * (b * d - a * c)),
                    e(2 * (c * d + a * b)),
                    e(a * a - b * b - c * c + d * d),
                ],
            ]);
            if rng.gen_bool(0.5) {
                m = m.scale(&real(int(-1)));
            }
            m
        }
        _ => {
            return Err(Error::Dimension(format!(
                "random orthogonal samples exist for N = 2, 3, not {n}"
            )))
        }
    };
    Ok(m)
}
