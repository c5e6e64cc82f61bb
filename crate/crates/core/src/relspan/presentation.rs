use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::partition::{Partition, Sign};
use crate::permgroup::Permutation;

use super::word::{Letter, Word, WordCombo};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SphereClass {
    Classical,
    Half,
    Free,
    Twisted,
    TwistedHalf,
}

impl SphereClass {
    pub const ALL: [SphereClass; 5] = [
        SphereClass::Classical,
        SphereClass::Half,
        SphereClass::Free,
        SphereClass::Twisted,
        SphereClass::TwistedHalf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SphereClass::Classical => "classical",
            SphereClass::Half => "half",
            SphereClass::Free => "free",
            SphereClass::Twisted => "twisted",
            SphereClass::TwistedHalf => "twisted-half",
        }
    }

    /// The generating permutation and twist flag, if any.
    pub fn family(self) -> Option<Family> {
        let crossing = Permutation::new(&[2, 1]).expect("valid");
        let half = Permutation::new(&[3, 2, 1]).expect("valid");
        match self {
            SphereClass::Classical => Some(Family::new(crossing, false)),
            SphereClass::Half => Some(Family::new(half, false)),
            SphereClass::Free => None,
            SphereClass::Twisted => Some(Family::new(crossing, true)),
            SphereClass::TwistedHalf => Some(Family::new(half, true)),
        }
    }
}

impl FromStr for SphereClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<SphereClass> {
        SphereClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown sphere class {s:?}")))
    }
}

/// Relations `R_σ` (untwisted) or `R̄_σ` (twisted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Family {
    pub perm: Permutation,
    pub twisted: bool,
}

impl Family {
    pub fn new(perm: Permutation, twisted: bool) -> Family {
        Family { perm, twisted }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub id: String,
    pub combo: WordCombo,
}

/// A sphere given by the unit relation(s), a list of permutation families
/// and the vanishing of products of `degree + 1` distinct coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpherePresentation {
    pub field: Field,
    pub n: usize,
    pub families: Vec<Family>,
    /// Polygonal degree d; `d = n` imposes no vanishing relations.
    pub degree: usize,
    pub label: String,
}

fn sphere_label(field: Field, class: SphereClass, d: usize, n: usize) -> String {
    format!("{}:{}:d={d}:N={n}", field.name(), class.name())
}

impl SpherePresentation {
    pub fn sphere(
        field: Field,
        class: SphereClass,
        d: usize,
        n: usize,
    ) -> Result<SpherePresentation> {
        if n == 0 || d == 0 || d > n {
            return Err(Error::Precondition(format!(
                "need 1 <= d <= N, got d={d}, N={n}"
            )));
        }
        Ok(SpherePresentation {
            field,
            n,
            families: class.family().into_iter().collect(),
            degree: d,
            label: sphere_label(field, class, d, n),
        })
    }

    /// Arbitrary families over the unit sphere with no vanishing relations.
    pub fn with_families(
        field: Field,
        n: usize,
        families: Vec<Family>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("N must be positive".into()));
        }
        let mut families = families;
        families.sort();
        families.dedup();
        Ok(SpherePresentation {
            field,
            n,
            families,
            degree: n,
            label: label.into(),
        })
    }

    /// Parses `{real|complex}:{class}:d=<k>:N=<n>`.
    pub fn parse(id: &str) -> Result<SpherePresentation> {
        let bad = || Error::Parse(format!("bad presentation id {id:?}"));
        let parts: Vec<&str> = id.split(':').collect();
        let [field, class, d, n] = parts.as_slice() else {
            return Err(bad());
        };
        let field = match *field {
            "real" => Field::Real,
            "complex" => Field::Complex,
            _ => return Err(bad()),
        };
        let class: SphereClass = class.parse()?;
        let d = d
            .strip_prefix("d=")
            .and_then(|t| t.parse().ok())
            .ok_or_else(bad)?;
        let n = n
            .strip_prefix("N=")
            .and_then(|t| t.parse().ok())
            .ok_or_else(bad)?;
        SpherePresentation::sphere(field, class, d, n)
    }

    /// Relations of both; the vanishing degree is the smaller one.
    pub fn union(&self, other: &SpherePresentation) -> Result<SpherePresentation> {
        if self.field != other.field || self.n != other.n {
            return Err(Error::Incompatible(format!(
                "{} and {}",
                self.label, other.label
            )));
        }
        let mut families = self.families.clone();
        families.extend(other.families.iter().cloned());
        families.sort();
        families.dedup();
        Ok(SpherePresentation {
            field: self.field,
            n: self.n,
            families,
            degree: self.degree.min(other.degree),
            label: format!("{} + {}", self.label, other.label),
        })
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        alphabet(self.field, self.n)
    }

    pub fn unit_relations(&self) -> Vec<Relation> {
        let minus_one = WordCombo::term(Word::empty(), -Rational::one());
        match self.field {
            Field::Real => {
                let mut c = minus_one;
                for i in 1..=self.n {
                    c.add_term(Word::from_indices(&[i, i]), Rational::one());
                }
                vec![Relation {
                    id: "unit".into(),
                    combo: c,
                }]
            }
            Field::Complex => {
                let mut zz = minus_one.clone();
                let mut sz = minus_one;
                for i in 1..=self.n {
                    zz.add_term(
                        Word(vec![Letter::plain(i), Letter::starred(i)]),
                        Rational::one(),
                    );
                    sz.add_term(
                        Word(vec![Letter::starred(i), Letter::plain(i)]),
                        Rational::one(),
                    );
                }
                vec![
                    Relation {
                        id: "unit".into(),
                        combo: zz,
                    },
                    Relation {
                        id: "unit*".into(),
                        combo: sz,
                    },
                ]
            }
        }
    }

    /// Products of `degree + 1` distinct coordinates, every order and star pattern.
    pub fn vanishing_relations(&self) -> Vec<Relation> {
        if self.degree >= self.n {
            return Vec::new();
        }
        let len = self.degree + 1;
        Word::all_of_length(&self.alphabet(), len)
            .into_iter()
            .filter(|w| {
                let idx: BTreeSet<usize> = w.letters().iter().map(|l| l.index).collect();
                idx.len() == len
            })
            .map(|w| Relation {
                id: format!("0@{w}"),
                combo: WordCombo::word(w),
            })
            .collect()
    }

    /// All generators, deduplicated up to scaling.
    pub fn relations(&self) -> Vec<Relation> {
        let mut out = self.unit_relations();
        for fam in &self.families {
            out.extend(instantiate_relations(
                &fam.perm,
                fam.twisted,
                self.field,
                self.n,
            ));
        }
        out.extend(self.vanishing_relations());
        let mut seen = BTreeSet::new();
        out.retain(|r| seen.insert(r.combo.monic()));
        out
    }
}

impl fmt::Display for SpherePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

pub fn alphabet(field: Field, n: usize) -> Vec<Letter> {
    match field {
        Field::Real => (1..=n).map(Letter::plain).collect(),
        Field::Complex => (1..=n)
            .flat_map(|i| [Letter::plain(i), Letter::starred(i)])
            .collect(),
    }
}

/// `x_{i_1}…x_{i_k} − s·x_{i_σ(1)}…x_{i_σ(k)}` over every letter tuple, with
/// `s` the signature of the kernel of the index tuples when twisted.
/// Zero combos and combos equal up to scaling are dropped.
pub fn instantiate_relations(
    sigma: &Permutation,
    twisted: bool,
    field: Field,
    n: usize,
) -> Vec<Relation> {
    let k = sigma.size();
    let tag = if twisted { "~" } else { "" };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for left in Word::all_of_length(&alphabet(field, n), k) {
        let right = Word(
            (1..=k)
                .map(|j| left.letters()[sigma.image(j) - 1])
                .collect(),
        );
        let sign = if twisted {
            let upper: Vec<usize> = left.letters().iter().map(|l| l.index).collect();
            let lower: Vec<usize> = right.letters().iter().map(|l| l.index).collect();
            Partition::kernel(&upper, &lower)
                .signature()
                .expect("kernels of a pairing pattern are even")
        } else {
            Sign::Plus
        };
        let mut combo = WordCombo::word(left.clone());
        combo.add_term(right, int(-sign.value()));
        if combo.is_zero() || !seen.insert(combo.monic()) {
            continue;
        }
        out.push(Relation {
            id: format!("{tag}{sigma}@{left}"),
            combo,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn combo(terms: &[(&str, i64)]) -> WordCombo {
        let mut c = WordCombo::zero();
        for (w, v) in terms {
            c.add_term(w.parse().unwrap(), int(*v));
        }
        c
    }

    #[test]
    fn commutators_from_the_crossing() {
        let rels = instantiate_relations(&perm("(21)"), false, Field::Real, 2);
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].combo.monic(), combo(&[("x2.x1", 1), ("x1.x2", -1)]));
    }

    #[test]
    fn twisted_crossing_anticommutes() {
        let rels = instantiate_relations(&perm("(21)"), true, Field::Real, 2);
        let combos: Vec<WordCombo> = rels.iter().map(|r| r.combo.monic()).collect();
        assert!(combos.contains(&combo(&[("x1.x2", 1), ("x2.x1", 1)])));
        // x1.x1 - x1.x1 vanishes and is dropped.
        assert_eq!(rels.len(), 1);
    }

    #[test]
    fn complex_twist_ignores_stars() {
        let rels = instantiate_relations(&perm("(21)"), true, Field::Complex, 2);
        let combos: Vec<WordCombo> = rels.iter().map(|r| r.combo.monic()).collect();
        assert!(combos.contains(&combo(&[("x1*.x1", 1), ("x1.x1*", -1)])));
        assert!(combos.contains(&combo(&[("x2*.x1", 1), ("x1.x2*", 1)])));
    }

    #[test]
    fn ids_parse_and_render() {
        let p = SpherePresentation::parse("complex:twisted-half:d=2:N=3").unwrap();
        assert_eq!(p.to_string(), "complex:twisted-half:d=2:N=3");
        assert_eq!(p.field, Field::Complex);
        assert!(SpherePresentation::parse("real:classical:d=4:N=3").is_err());
        assert!(SpherePresentation::parse("real:nope:d=1:N=3").is_err());
        assert!(SpherePresentation::parse("real:free:d=1").is_err());
    }

    #[test]
    fn vanishing_relation_counts() {
        let p = SpherePresentation::sphere(Field::Real, SphereClass::Free, 1, 3).unwrap();
        assert_eq!(p.vanishing_relations().len(), 6);
        let p = SpherePresentation::sphere(Field::Complex, SphereClass::Free, 2, 3).unwrap();
        assert_eq!(p.vanishing_relations().len(), 6 * 8);
        let p = SpherePresentation::sphere(Field::Real, SphereClass::Free, 3, 3).unwrap();
        assert!(p.vanishing_relations().is_empty());
    }

    #[test]
    fn union_takes_smaller_degree() {
        let a = SpherePresentation::sphere(Field::Real, SphereClass::Classical, 3, 3).unwrap();
        let b = SpherePresentation::sphere(Field::Real, SphereClass::Twisted, 1, 3).unwrap();
        let u = a.union(&b).unwrap();
        assert_eq!(u.degree, 1);
        assert_eq!(u.families.len(), 2);
        let c = SpherePresentation::sphere(Field::Complex, SphereClass::Free, 3, 3).unwrap();
        assert!(a.union(&c).is_err());
    }
}
