use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{gauss, real, Matrix, NcAlgebra, Rational, Scalar};

use super::{points::polygonal_point, Coords, ModelKind, ModelPoint};

pub const MAX_CLIFFORD_N: usize = 8;

fn pauli(name: char) -> Matrix<Scalar> {
    let o = || Scalar::zero();
    let one = || Scalar::one();
    let rows = match name {
        'x' => vec![vec![o(), one()], vec![one(), o()]],
        'y' => vec![
            vec![o(), gauss(Rational::zero(), -Rational::one())],
            vec![gauss(Rational::zero(), Rational::one()), o()],
        ],
        'z' => vec![vec![one(), o()], vec![o(), real(-Rational::one())]],
        _ => unreachable!("only x, y, z"),
    };
    Matrix::from_rows(rows).expect("square")
}

/// `N` pairwise anticommuting self-adjoint involutions of size 2^⌈N/2⌉:
/// `Z⊗…⊗Z⊗X⊗1⊗…` and `Z⊗…⊗Z⊗Y⊗1⊗…`.
pub fn clifford_gammas(n: usize) -> Result<Vec<Matrix<Scalar>>> {
    if n > MAX_CLIFFORD_N {
        return Err(Error::Dimension(format!(
            "clifford model limited to N <= {MAX_CLIFFORD_N}, got {n}"
        )));
    }
    let qubits = n.div_ceil(2);
    let id2 = Matrix::<Scalar>::identity(2);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let site = i / 2;
        let centre = pauli(if i % 2 == 0 { 'x' } else { 'y' });
        let mut m = Matrix::<Scalar>::identity(1);
        for q in 0..qubits {
            let factor = match q.cmp(&site) {
                std::cmp::Ordering::Less => pauli('z'),
                std::cmp::Ordering::Equal => centre.clone(),
                std::cmp::Ordering::Greater => id2.clone(),
            };
            m = m.kron(&factor);
        }
        out.push(m);
    }
    Ok(out)
}

/// `x_i = λ_i γ_i`.
pub fn clifford_model(n: usize, lambda: &[Rational]) -> Result<Vec<Matrix<Scalar>>> {
    if lambda.len() != n {
        return Err(Error::Dimension(format!(
            "expected {n} coefficients, got {}",
            lambda.len()
        )));
    }
    let norm: Rational = lambda.iter().map(|l| l * l).sum();
    if !norm.is_one() {
        return Err(Error::NormViolation);
    }
    Ok(clifford_gammas(n)?
        .into_iter()
        .zip(lambda)
        .map(|(g, l)| NcAlgebra::scale(&g, l))
        .collect())
}

/// A Clifford model whose coefficients are a rational point on `support`.
pub fn clifford_point(n: usize, support: &[usize], seed: u64) -> Result<ModelPoint> {
    let base = polygonal_point(n, support.len(), support, seed)?;
    let Coords::Scalars(xs) = &base.coords else {
        unreachable!("polygonal points are scalar")
    };
    let lambda: Vec<Rational> = xs.iter().map(|z| z.re.clone()).collect();
    Ok(ModelPoint {
        kind: ModelKind::Clifford,
        n,
        d: base.d,
        support: base.support,
        coords: Coords::Matrices(clifford_model(n, &lambda)?),
    })
}

/// `γ_i = [[0, z_i], [z̄_i, 0]]` for a complex point with `d <= 2`.
pub fn halflib_model(z: &ModelPoint) -> Result<Vec<Matrix<Scalar>>> {
    let Coords::Scalars(zs) = &z.coords else {
        return Err(Error::Precondition(
            "half-liberated model needs a complex point".into(),
        ));
    };
    if z.kind != ModelKind::ComplexPoint || z.d > 2 {
        return Err(Error::Precondition(format!(
            "half-liberated model needs a complex point with d <= 2, got {}",
            z.describe()
        )));
    }
    Ok(zs
        .iter()
        .map(|c| {
            Matrix::from_rows(vec![
                vec![Scalar::zero(), c.clone()],
                vec![c.conj(), Scalar::zero()],
            ])
            .expect("square")
        })
        .collect())
}

pub fn halflib_point(z: &ModelPoint) -> Result<ModelPoint> {
    Ok(ModelPoint {
        kind: ModelKind::Halflib,
        n: z.n,
        d: z.d,
        support: z.support.clone(),
        coords: Coords::Matrices(halflib_model(z)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::models::complex_polygonal_point;

    fn sum_squares(ms: &[Matrix<Scalar>]) -> Matrix<Scalar> {
        ms.iter()
            .fold(ms[0].zero_like(), |acc, m| acc.add(&m.mul(m)))
    }

    #[test]
    fn gammas_anticommute() {
        for n in 1..=MAX_CLIFFORD_N {
            let g = clifford_gammas(n).unwrap();
            let dim = 1 << n.div_ceil(2);
            for (i, a) in g.iter().enumerate() {
                assert_eq!(a.rows(), dim);
                assert!(a.is_self_adjoint());
                assert_eq!(a.mul(a), Matrix::identity(dim));
                for b in &g[i + 1..] {
                    assert!(a.mul(b).add(&b.mul(a)).is_zero());
                }
            }
        }
        assert!(clifford_gammas(9).is_err());
    }

    #[test]
    fn clifford_examples() {
        let x = clifford_model(2, &[rat(3, 5), rat(4, 5)]).unwrap();
        assert!(x[0].mul(&x[1]).add(&x[1].mul(&x[0])).is_zero());
        assert_eq!(sum_squares(&x), Matrix::identity(2));
        let x = clifford_model(3, &[rat(2, 3), rat(1, 3), rat(2, 3)]).unwrap();
        let lhs = x[0].mul(&x[1]).mul(&x[2]);
        let rhs = x[2].mul(&x[1]).mul(&x[0]);
        assert!(lhs.add(&rhs).is_zero());
        assert_eq!(sum_squares(&x), Matrix::identity(4));
        assert!(matches!(
            clifford_model(2, &[rat(1, 2), rat(1, 2)]),
            Err(Error::NormViolation)
        ));
    }

    #[test]
    fn halflib_examples() {
        for seed in 0..5 {
            let z = complex_polygonal_point(3, 2, &[1, 3], seed).unwrap();
            let g = halflib_model(&z).unwrap();
            assert!(g.iter().all(Matrix::is_self_adjoint));
            assert_eq!(sum_squares(&g), Matrix::identity(2));
            assert!(g[0].mul(&g[1]).mul(&g[2]).is_zero());
        }
        let z = complex_polygonal_point(3, 3, &[1, 2, 3], 0).unwrap();
        assert!(halflib_model(&z).is_err());
    }
}
