use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{NcAlgebra, Rational};

/// A reduced word in the free product of N copies of Z_2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord(Vec<usize>);

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn generator(i: usize) -> GroupWord {
        GroupWord(vec![i])
    }

    /// Reduces `g_{l_1}…g_{l_m}` by cancelling equal neighbours.
    pub fn from_letters(letters: &[usize]) -> GroupWord {
        let mut out: Vec<usize> = Vec::with_capacity(letters.len());
        for &l in letters {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GroupWord::from_letters(&v)
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().copied().collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            write!(f, "g{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Compares the reduced forms of `g_i g_j g_k` and `g_k g_j g_i`.
pub fn free_product_check(i: usize, j: usize, k: usize) -> bool {
    GroupWord::from_letters(&[i, j, k]) == GroupWord::from_letters(&[k, j, i])
}

/// Rational group algebra of the free product.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupAlgebra {
    terms: BTreeMap<GroupWord, Rational>,
}

impl GroupAlgebra {
    pub fn zero() -> GroupAlgebra {
        GroupAlgebra::default()
    }

    pub fn element(g: GroupWord) -> GroupAlgebra {
        GroupAlgebra {
            terms: BTreeMap::from([(g, Rational::one())]),
        }
    }

    pub fn terms(&self) -> &BTreeMap<GroupWord, Rational> {
        &self.terms
    }

    fn push(&mut self, g: GroupWord, c: Rational) {
        let e = self.terms.entry(g.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }
}

impl NcAlgebra for GroupAlgebra {
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.push(g.clone(), c.clone());
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = GroupAlgebra::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.push(a.mul(b), x * y);
            }
        }
        out
    }

    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return GroupAlgebra::zero();
        }
        GroupAlgebra {
            terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect(),
        }
    }

    /// Group elements are unitary: `g* = g⁻¹`.
    fn adjoint(&self) -> Self {
        GroupAlgebra {
            terms: self
                .terms
                .iter()
                .map(|(g, v)| (g.inverse(), v.clone()))
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn zero_like(&self) -> Self {
        GroupAlgebra::zero()
    }

    fn one_like(&self) -> Self {
        GroupAlgebra::element(GroupWord::identity())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_product_examples() {
        assert!(free_product_check(1, 1, 3));
        assert!(free_product_check(2, 3, 2));
        assert!(!free_product_check(1, 2, 3));
    }

    #[test]
    fn reduction() {
        let w = GroupWord::from_letters(&[1, 2, 2, 1, 3]);
        assert_eq!(w, GroupWord::generator(3));
        let g = GroupWord::from_letters(&[1, 2, 3]);
        assert!(g.mul(&g.inverse()).is_identity());
        assert_eq!(g.to_string(), "g1g2g3");
    }

    #[test]
    fn free_product_check_matches_not_distinct() {
        for i in 1..=4 {
            for j in 1..=4 {
                for k in 1..=4 {
                    let distinct = i != j && j != k && i != k;
                    assert_eq!(free_product_check(i, j, k), !distinct || i == k);
                }
            }
        }
    }
}
