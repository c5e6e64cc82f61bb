use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rank, Matrix, NcAlgebra, Scalar};
use crate::relspan::{Word, WordCombo};

use super::{Coords, ModelPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Scalar(Scalar),
    Matrix(Matrix<Scalar>),
}

impl Evaluation {
    pub fn is_zero(&self) -> bool {
        match self {
            Evaluation::Scalar(z) => Zero::is_zero(z),
            Evaluation::Matrix(m) => Matrix::is_zero(m),
        }
    }

    /// Entries in row-major order (one for a scalar).
    pub fn entries(&self) -> Vec<Scalar> {
        match self {
            Evaluation::Scalar(z) => vec![z.clone()],
            Evaluation::Matrix(m) => m.entries().to_vec(),
        }
    }
}

fn eval_generic<A: NcAlgebra>(combo: &WordCombo, coords: &[A], star_ok: bool) -> Result<A> {
    let one = coords
        .first()
        .map(A::one_like)
        .ok_or_else(|| Error::Dimension("model has no coordinates".into()))?;
    let mut total = one.zero_like();
    for (w, c) in combo.terms() {
        let mut acc = one.clone();
        for l in w.letters() {
            let x = coords
                .get(l.index.wrapping_sub(1))
                .ok_or(Error::LetterOutOfRange {
                    index: l.index,
                    dimension: coords.len(),
                })?;
            acc = if l.star {
                if !star_ok {
                    return Err(Error::StarOnRealModel);
                }
                acc.mul(&x.adjoint())
            } else {
                acc.mul(x)
            };
        }
        total = total.add(&acc.scale(c));
    }
    Ok(total)
}

/// Homomorphic evaluation; stars become conjugates on complex points and
/// are rejected elsewhere.
pub fn evaluate(combo: &WordCombo, model: &ModelPoint) -> Result<Evaluation> {
    let star_ok = model.is_complex();
    match &model.coords {
        Coords::Scalars(v) => eval_generic(combo, v, star_ok).map(Evaluation::Scalar),
        Coords::Matrices(v) => eval_generic(combo, v, star_ok).map(Evaluation::Matrix),
    }
}

pub fn evaluate_word(w: &Word, model: &ModelPoint) -> Result<Evaluation> {
    evaluate(&WordCombo::word(w.clone()), model)
}

/// Rank of the matrix with one row per function and one column per matrix
/// entry per sample. Full rank certifies linear independence.
pub fn independence_rank(functions: &[WordCombo], samples: &[ModelPoint]) -> Result<usize> {
    let rows = functions
        .iter()
        .map(|f| {
            let mut row = Vec::new();
            for s in samples {
                row.extend(evaluate(f, s)?.entries());
            }
            Ok(row)
        })
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Ok(rank(&rows))
}
