//! Exact scalars, dense matrices and fraction-free rank.
//!
//! Scalars are Gaussian rationals `a + bi` with big-rational parts. Matrices
//! are generic over their entry ring so that the 0/1 partition maps can use
//! machine integers while models use [`Scalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Scalar = Complex<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn real(r: Rational) -> Scalar {
    Complex::new(r, Rational::zero())
}

pub fn gauss(re: Rational, im: Rational) -> Scalar {
    Complex::new(re, im)
}

/// `p/q` or `p` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse(n)?, d))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}

pub fn fmt_scalar(z: &Scalar) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => fmt_rational(&z.re),
        (true, false) => format!("{}i", fmt_rational(&z.im)),
        (false, false) => {
            let sign = if z.im.is_negative() { "-" } else { "+" };
            format!(
                "{}{}{}i",
                fmt_rational(&z.re),
                sign,
                fmt_rational(&z.im.abs())
            )
        }
    }
}

/// Entry ring for [`Matrix`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix sum of different shapes".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| c.clone() * a.clone())
    }

    /// Kronecker product; row index of `self` is the more significant digit.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = other.get(p, q);
                        if !b.is_zero() {
                            out.set(
                                i * other.rows + p,
                                j * other.cols + q,
                                a.clone() * b.clone(),
                            );
                        }
                    }
                }
            }
        }
        out
    }

    pub fn kron_power(&self, k: usize) -> Self {
        let mut out = Matrix::<T>::identity(1);
        for _ in 0..k {
            out = out.kron(self);
        }
        out
    }
}

impl Matrix<Scalar> {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().map(|z| z.conj())
    }

    pub fn is_self_adjoint(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn from_rational_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(real).collect())
                .collect(),
        )
    }

    pub fn from_integer_matrix(m: &Matrix<i64>) -> Self {
        m.map(|&v| real(int(v)))
    }
}

impl fmt::Display for Matrix<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(fmt_scalar).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A (possibly noncommutative) algebra over the rationals, used as the entry
/// type of quantum matrices and as the value type of word evaluation.
pub trait NcAlgebra: Clone + PartialEq + fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn adjoint(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl NcAlgebra for Scalar {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        Complex::new(&self.re * c, &self.im * c)
    }
    fn adjoint(&self) -> Self {
        self.conj()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
}

impl NcAlgebra for Matrix<Scalar> {
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("algebra elements share a shape")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("algebra elements share a shape")
    }
    fn scale(&self, c: &Rational) -> Self {
        self.map(|z| NcAlgebra::scale(z, c))
    }
    fn adjoint(&self) -> Self {
        Matrix::adjoint(self)
    }
    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Matrix::zeros(self.rows, self.cols)
    }
    fn one_like(&self) -> Self {
        Matrix::identity(self.rows)
    }
}

type GaussInt = Complex<BigInt>;

fn lcm_of_denominators(row: &[Scalar]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, z| {
        acc.lcm(z.re.denom()).lcm(z.im.denom())
    })
}

fn to_gauss_int(z: &Scalar, scale: &BigInt) -> GaussInt {
    let re = (&z.re * Rational::from_integer(scale.clone())).to_integer();
    let im = (&z.im * Rational::from_integer(scale.clone())).to_integer();
    Complex::new(re, im)
}

fn exact_div(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let norm = &b.re * &b.re + &b.im * &b.im;
    let num = a * b.conj();
    let (re, rr) = num.re.div_rem(&norm);
    let (im, ri) = num.im.div_rem(&norm);
    debug_assert!(
        rr.is_zero() && ri.is_zero(),
        "Bareiss division must be exact"
    );
    Complex::new(re, im)
}

/// Rank over the Gaussian rationals of the given rows.
///
/// Each row is scaled to Gaussian integers and reduced with Bareiss'
/// fraction-free elimination, so no intermediate fractions appear.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m: Vec<Vec<GaussInt>> = rows
        .iter()
        .map(|row| {
            let s = lcm_of_denominators(row);
            row.iter().map(|z| to_gauss_int(z, &s)).collect()
        })
        .collect();
    let n_rows = m.len();
    let mut prev = GaussInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..n_rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = exact_div(&v, &prev);
            }
            m[i][c] = GaussInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain Gauss-Jordan over Q(i); independent of the Bareiss path.
    fn rank_by_field_elimination(rows: &[Vec<Scalar>]) -> usize {
        let mut m = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !Zero::is_zero(&m[i][c])) else {
                continue;
            };
            m.swap(r, p);
            let inv = Scalar::one() / m[r][c].clone();
            for i in 0..m.len() {
                if i != r && !Zero::is_zero(&m[i][c]) {
                    let f = &m[i][c] * &inv;
                    let pivot = m[r].clone();
                    for (x, p) in m[i].iter_mut().zip(&pivot) {
                        *x = &*x - &f * p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn g(a: i64, b: i64, d: i64) -> Scalar {
        gauss(rat(a, d), rat(b, d))
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![g(0, 0, 1), g(0, 0, 1)]]), 0);
        let rows = vec![
            vec![g(1, 0, 2), g(0, 1, 1), g(3, 0, 1)],
            vec![g(1, 0, 1), g(0, 2, 1), g(6, 0, 1)],
            vec![g(0, 1, 3), g(1, 0, 1), g(0, 0, 1)],
        ];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank_by_field_elimination(&rows), 2);
    }

    #[test]
    fn duplicate_row_drops_rank() {
        let r = vec![g(1, 1, 1), g(2, -1, 3)];
        assert_eq!(rank(&[r.clone(), r]), 1);
    }

    #[test]
    fn kron_of_identities() {
        let i2 = Matrix::<i64>::identity(2);
        assert_eq!(i2.kron(&Matrix::identity(3)), Matrix::identity(6));
        assert_eq!(i2.kron_power(0), Matrix::identity(1));
    }

    #[test]
    fn rational_text_roundtrip() {
        for s in ["0", "-3", "5/7", "-12/5"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert_eq!(fmt_scalar(&g(3, -4, 5)), "3/5-4/5i");
    }

    proptest::proptest! {
        #[test]
        fn bareiss_matches_field_elimination(
            entries in proptest::collection::vec((-3i64..=3, -2i64..=2, 1i64..=3), 12)
        ) {
            let rows: Vec<Vec<Scalar>> = entries
                .chunks(4)
                .map(|c| c.iter().map(|&(a, b, d)| g(a, b, d)).collect())
                .collect();
            proptest::prop_assert_eq!(rank(&rows), rank_by_field_elimination(&rows));
        }
    }
}
