use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Rational};

use super::presentation::{Relation, SpherePresentation};
use super::word::{Letter, Word, WordCombo};

/// Default bound on the number of words of length `<= D`.
pub const DEFAULT_COLUMN_BUDGET: usize = 20_000;

type SparseRow = Vec<(usize, Rational)>;

/// `a - c·b`, both sorted by column.
fn sub_scaled(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct GeneratorRow {
    relation: usize,
    left: Word,
    right: Word,
}

#[derive(Clone, Debug)]
struct BasisRow {
    entries: SparseRow,
    origin: GeneratorRow,
    /// Row = scale · (origin − Σ coef · basis[id]).
    scale: Rational,
    trace: Vec<(usize, Rational)>,
}

/// One term `coef · left · relation · right` of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertTerm {
    pub left: Word,
    pub relation: String,
    pub right: Word,
    #[serde(serialize_with = "ser_rational")]
    pub coef: Rational,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

/// Expresses a target as a combination of two-sided multiples of relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub terms: Vec<CertTerm>,
}

impl Certificate {
    /// Re-expands the certificate against the relations of `pres`.
    pub fn expand(&self, pres: &SpherePresentation) -> Result<WordCombo> {
        let rels: HashMap<String, WordCombo> = pres
            .relations()
            .into_iter()
            .map(|r| (r.id, r.combo))
            .collect();
        let mut out = WordCombo::zero();
        for t in &self.terms {
            let r = rels
                .get(&t.relation)
                .ok_or_else(|| Error::Precondition(format!("unknown relation {}", t.relation)))?;
            out = out.add(&r.sandwich(&t.left, &t.right).scale(&t.coef));
        }
        Ok(out)
    }

    pub fn verify(&self, pres: &SpherePresentation, target: &WordCombo) -> bool {
        self.expand(pres).is_ok_and(|e| &e == target)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Derivation {
    Derived { certificate: Certificate },
    NotDerivableAtDegree { degree: usize },
}

impl Derivation {
    pub fn is_derived(&self) -> bool {
        matches!(self, Derivation::Derived { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Derivation::Derived { certificate } => Some(certificate),
            Derivation::NotDerivableAtDegree { .. } => None,
        }
    }
}

/// Semi-echelon basis of the span of `w1·r·w2`, total degree `<= D`, inside
/// the space of all words of length `<= D`.
pub struct IdealSpan {
    presentation: SpherePresentation,
    degree: usize,
    relations: Vec<Relation>,
    index: HashMap<Word, usize>,
    columns: Vec<Word>,
    basis: Vec<BasisRow>,
    pivots: HashMap<usize, usize>,
}

fn column_count(letters: usize, degree: usize) -> Option<usize> {
    let mut total: usize = 0;
    let mut power: usize = 1;
    for _ in 0..=degree {
        total = total.checked_add(power)?;
        power = power.checked_mul(letters)?;
    }
    Some(total)
}

impl IdealSpan {
    pub fn build(pres: &SpherePresentation, degree: usize) -> Result<IdealSpan> {
        IdealSpan::build_with_budget(pres, degree, DEFAULT_COLUMN_BUDGET)
    }

    pub fn build_with_budget(
        pres: &SpherePresentation,
        degree: usize,
        budget: usize,
    ) -> Result<IdealSpan> {
        let alphabet: Vec<Letter> = pres.alphabet();
        let required = column_count(alphabet.len(), degree).unwrap_or(usize::MAX);
        if required > budget {
            return Err(Error::Budget { required, budget });
        }
        let by_length: Vec<Vec<Word>> = (0..=degree)
            .map(|l| Word::all_of_length(&alphabet, l))
            .collect();
        let columns: Vec<Word> = by_length.iter().flatten().cloned().collect();
        let index: HashMap<Word, usize> = columns
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let relations = pres.relations();

        // Multiplier pairs grouped by total length.
        let pairs_up_to = |budget: usize| -> Vec<(Word, Word)> {
            let mut out = Vec::new();
            for a in 0..=budget {
                for b in 0..=budget - a {
                    for l in &by_length[a] {
                        for r in &by_length[b] {
                            out.push((l.clone(), r.clone()));
                        }
                    }
                }
            }
            out
        };
        let pair_table: Vec<Vec<(Word, Word)>> = (0..=degree).map(pairs_up_to).collect();

        let rows: Vec<(GeneratorRow, SparseRow)> = relations
            .par_iter()
            .enumerate()
            .filter(|(_, r)| r.combo.degree() <= degree)
            .flat_map_iter(|(ri, r)| {
                let slack = degree - r.combo.degree();
                let index = &index;
                pair_table[slack].iter().map(move |(l, rt)| {
                    let mut row: SparseRow = r
                        .combo
                        .terms()
                        .iter()
                        .map(|(w, c)| (index[&l.concat(w).concat(rt)], c.clone()))
                        .collect();
                    row.sort_by_key(|e| e.0);
                    let origin = GeneratorRow {
                        relation: ri,
                        left: l.clone(),
                        right: rt.clone(),
                    };
                    (origin, row)
                })
            })
            .collect();

        let mut span = IdealSpan {
            presentation: pres.clone(),
            degree,
            relations,
            index,
            columns,
            basis: Vec::new(),
            pivots: HashMap::new(),
        };
        for (origin, row) in rows {
            span.insert(origin, row);
        }
        Ok(span)
    }

    fn reduce(&self, mut v: SparseRow, trace: &mut Vec<(usize, Rational)>) -> SparseRow {
        while let Some((col, c)) = v.last() {
            let Some(&b) = self.pivots.get(col) else {
                break;
            };
            let c = c.clone();
            v = sub_scaled(&v, &c, &self.basis[b].entries);
            trace.push((b, c));
        }
        v
    }

    fn insert(&mut self, origin: GeneratorRow, row: SparseRow) {
        let mut trace = Vec::new();
        let v = self.reduce(row, &mut trace);
        let Some((col, lead)) = v.last() else { return };
        let scale = Rational::one() / lead;
        let col = *col;
        let entries = v.into_iter().map(|(c, x)| (c, x * &scale)).collect();
        self.pivots.insert(col, self.basis.len());
        self.basis.push(BasisRow {
            entries,
            origin,
            scale,
            trace,
        });
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn presentation(&self) -> &SpherePresentation {
        &self.presentation
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// The basis row whose leading word is `w`, as a combo.
    pub fn basis_row_leading(&self, w: &Word) -> Option<WordCombo> {
        let col = self.index.get(w)?;
        let b = self.pivots.get(col)?;
        let mut out = WordCombo::zero();
        for (c, x) in &self.basis[*b].entries {
            out.add_term(self.columns[*c].clone(), x.clone());
        }
        Some(out)
    }

    fn to_row(&self, target: &WordCombo) -> Result<SparseRow> {
        if target.degree() > self.degree {
            return Err(Error::DegreeOverflow {
                degree: target.degree(),
                bound: self.degree,
            });
        }
        let mut row = Vec::with_capacity(target.len());
        for (w, c) in target.terms() {
            let col = self.index.get(w).ok_or_else(|| {
                let bad = w
                    .letters()
                    .iter()
                    .find(|l| {
                        l.index > self.presentation.n
                            || (l.star && self.presentation.field == super::Field::Real)
                    })
                    .map_or(0, |l| l.index);
                Error::LetterOutOfRange {
                    index: bad,
                    dimension: self.presentation.n,
                }
            })?;
            row.push((*col, c.clone()));
        }
        row.sort_by_key(|e| e.0);
        Ok(row)
    }

    /// Membership of `target`, with a certificate when it holds.
    pub fn derives(&self, target: &WordCombo) -> Result<Derivation> {
        let row = self.to_row(target)?;
        let mut trace = Vec::new();
        if !self.reduce(row, &mut trace).is_empty() {
            return Ok(Derivation::NotDerivableAtDegree {
                degree: self.degree,
            });
        }
        Ok(Derivation::Derived {
            certificate: self.certificate_from_trace(trace),
        })
    }

    /// Unfolds basis rows into generator rows, latest basis row first.
    fn certificate_from_trace(&self, trace: Vec<(usize, Rational)>) -> Certificate {
        let mut coef: BTreeMap<usize, Rational> = BTreeMap::new();
        for (b, c) in trace {
            *coef.entry(b).or_insert_with(Rational::zero) += c;
        }
        let mut gens: BTreeMap<GeneratorRow, Rational> = BTreeMap::new();
        while let Some((b, a)) = coef.pop_last() {
            if a.is_zero() {
                continue;
            }
            let row = &self.basis[b];
            let f = &a * &row.scale;
            *gens
                .entry(row.origin.clone())
                .or_insert_with(Rational::zero) += &f;
            for (j, c) in &row.trace {
                *coef.entry(*j).or_insert_with(Rational::zero) -= &f * c;
            }
        }
        let terms = gens
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| CertTerm {
                left: g.left,
                relation: self.relations[g.relation].id.clone(),
                right: g.right,
                coef: c,
            })
            .collect();
        Certificate { terms }
    }
}

/// Both inclusions between `a ∪ b` and `expected`, generator by generator.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionVerdict {
    pub degree: usize,
    /// Generators of `expected`, derived from `a ∪ b`.
    pub forward: Vec<(String, Derivation)>,
    /// Generators of `a ∪ b`, derived from `expected`.
    pub backward: Vec<(String, Derivation)>,
}

impl IntersectionVerdict {
    pub fn holds(&self) -> bool {
        self.forward
            .iter()
            .chain(&self.backward)
            .all(|(_, d)| d.is_derived())
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.forward
            .iter()
            .chain(&self.backward)
            .find(|(_, d)| !d.is_derived())
            .map(|(id, _)| id.as_str())
    }

    pub fn certificate_terms(&self) -> usize {
        self.forward
            .iter()
            .chain(&self.backward)
            .filter_map(|(_, d)| d.certificate())
            .map(Certificate::len)
            .sum()
    }
}

pub fn intersect_equal(
    a: &SpherePresentation,
    b: &SpherePresentation,
    expected: &SpherePresentation,
    degree: usize,
) -> Result<IntersectionVerdict> {
    let union = a.union(b)?;
    if union.field != expected.field || union.n != expected.n {
        return Err(Error::Incompatible(format!(
            "{} and {}",
            union.label, expected.label
        )));
    }
    let (left, right) = rayon::join(
        || IdealSpan::build(&union, degree),
        || IdealSpan::build(expected, degree),
    );
    let (left, right) = (left?, right?);
    let derive_all = |span: &IdealSpan, gens: Vec<Relation>| -> Result<Vec<(String, Derivation)>> {
        gens.into_iter()
            .map(|r| span.derives(&r.combo).map(|d| (r.id, d)))
            .collect()
    };
    Ok(IntersectionVerdict {
        degree,
        forward: derive_all(&left, expected.relations())?,
        backward: derive_all(&right, union.relations())?,
    })
}
