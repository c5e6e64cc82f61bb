use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, int, Matrix, NcAlgebra, Rational, Scalar};
use crate::models::{GroupAlgebra, GroupWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RelationSetId {
    O,
    Obar,
    Ostar,
    Obarstar,
    H,
    Hstar,
    Hinf,
    Hplus,
    U,
    Ubar,
    Ustar,
    Ubarstar,
    K,
    Kstar,
    Kinf,
    Kplus,
}

impl RelationSetId {
    pub const ALL: [RelationSetId; 16] = [
        RelationSetId::O,
        RelationSetId::Obar,
        RelationSetId::Ostar,
        RelationSetId::Obarstar,
        RelationSetId::H,
        RelationSetId::Hstar,
        RelationSetId::Hinf,
        RelationSetId::Hplus,
        RelationSetId::U,
        RelationSetId::Ubar,
        RelationSetId::Ustar,
        RelationSetId::Ubarstar,
        RelationSetId::K,
        RelationSetId::Kstar,
        RelationSetId::Kinf,
        RelationSetId::Kplus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationSetId::O => "O",
            RelationSetId::Obar => "Obar",
            RelationSetId::Ostar => "Ostar",
            RelationSetId::Obarstar => "Obarstar",
            RelationSetId::H => "H",
            RelationSetId::Hstar => "Hstar",
            RelationSetId::Hinf => "Hinf",
            RelationSetId::Hplus => "Hplus",
            RelationSetId::U => "U",
            RelationSetId::Ubar => "Ubar",
            RelationSetId::Ustar => "Ustar",
            RelationSetId::Ubarstar => "Ubarstar",
            RelationSetId::K => "K",
            RelationSetId::Kstar => "Kstar",
            RelationSetId::Kinf => "Kinf",
            RelationSetId::Kplus => "Kplus",
        }
    }

    pub fn is_complex(self) -> bool {
        matches!(
            self,
            RelationSetId::U
                | RelationSetId::Ubar
                | RelationSetId::Ustar
                | RelationSetId::Ubarstar
                | RelationSetId::K
                | RelationSetId::Kstar
                | RelationSetId::Kinf
                | RelationSetId::Kplus
        )
    }
}

impl fmt::Display for RelationSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationSetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<RelationSetId> {
        RelationSetId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown relation set {s:?}")))
    }
}

/// `u_{row,col}`, or its adjoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub star: bool,
}

impl Entry {
    pub fn new(row: usize, col: usize) -> Entry {
        Entry {
            row,
            col,
            star: false,
        }
    }

    fn with_star(self, star: bool) -> Entry {
        Entry { star, ..self }
    }

    fn same_line(self, other: Entry) -> bool {
        (self.row, self.col) != (other.row, other.col)
            && (self.row == other.row || self.col == other.col)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u{}{}{}",
            self.row,
            self.col,
            if self.star { "*" } else { "" }
        )
    }
}

/// A polynomial identity `Σ c · (product of entries) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub terms: Vec<(Rational, Vec<Entry>)>,
}

impl Identity {
    fn new(terms: Vec<(i64, Vec<Entry>)>) -> Identity {
        Identity {
            terms: terms.into_iter().map(|(c, e)| (int(c), e)).collect(),
        }
    }

    /// `lhs − s · rhs`.
    fn difference(lhs: Vec<Entry>, sign: i64, rhs: Vec<Entry>) -> Identity {
        Identity::new(vec![(1, lhs), (-sign, rhs)])
    }

    fn monomial(e: Vec<Entry>) -> Identity {
        Identity::new(vec![(1, e)])
    }

    pub fn evaluate<A: NcAlgebra>(&self, u: &QuantumMatrix<A>) -> A {
        let one = u.one();
        let mut total = one.zero_like();
        for (c, entries) in &self.terms {
            let mut acc = one.clone();
            for e in entries {
                acc = acc.mul(&u.entry(*e));
            }
            total = total.add(&acc.scale(c));
        }
        total
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, entries)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            let word: Vec<String> = entries.iter().map(Entry::to_string).collect();
            let word = if word.is_empty() {
                "1".to_string()
            } else {
                word.join(".")
            };
            if abs.is_one() {
                f.write_str(&word)?;
            } else {
                write!(f, "{}*{word}", fmt_rational(&abs))?;
            }
        }
        f.write_str(" = 0")
    }
}

/// An N×N matrix with entries in a *-algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumMatrix<A> {
    n: usize,
    entries: Vec<A>,
}

impl<A: NcAlgebra> QuantumMatrix<A> {
    pub fn new(n: usize, entries: Vec<A>) -> Result<QuantumMatrix<A>> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(QuantumMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, e: Entry) -> A {
        let a = &self.entries[(e.row - 1) * self.n + (e.col - 1)];
        if e.star {
            a.adjoint()
        } else {
            a.clone()
        }
    }

    fn one(&self) -> A {
        self.entries[0].one_like()
    }
}

impl QuantumMatrix<Scalar> {
    pub fn from_matrix(m: &Matrix<Scalar>) -> Result<QuantumMatrix<Scalar>> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "{}x{} is not square",
                m.rows(),
                m.cols()
            )));
        }
        QuantumMatrix::new(m.rows(), m.entries().to_vec())
    }
}

impl QuantumMatrix<GroupAlgebra> {
    /// `u_{ij} = δ_{ij} g_i` in the group algebra of Z_2^{*N}.
    pub fn group_dual(n: usize) -> Result<QuantumMatrix<GroupAlgebra>> {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(if i == j {
                    GroupAlgebra::element(GroupWord::generator(i))
                } else {
                    GroupAlgebra::zero()
                });
            }
        }
        QuantumMatrix::new(n, entries)
    }
}

fn entries(n: usize) -> Vec<Entry> {
    (1..=n)
        .flat_map(|r| (1..=n).map(move |c| Entry::new(r, c)))
        .collect()
}

/// Letters of the relations: entries, plus their adjoints when complex.
fn letters(n: usize, complex: bool) -> Vec<Entry> {
    entries(n)
        .into_iter()
        .flat_map(|e| {
            if complex {
                vec![e, e.with_star(true)]
            } else {
                vec![e]
            }
        })
        .collect()
}

fn delta(i: usize, j: usize) -> Vec<(i64, Vec<Entry>)> {
    if i == j {
        vec![(-1, Vec::new())]
    } else {
        Vec::new()
    }
}

/// Orthogonality (real) or biunitarity (complex).
fn base_identities(n: usize, complex: bool) -> Vec<Identity> {
    let mut out = Vec::new();
    let e = |r, c, s| Entry {
        row: r,
        col: c,
        star: s,
    };
    if !complex {
        for a in entries(n) {
            out.push(Identity::difference(vec![a], 1, vec![a.with_star(true)]));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            // u u* = 1, u* u = 1, u^t ū = 1, ū u^t = 1; for real entries
            // these collapse to u u^t = u^t u = 1.
            let shapes: Vec<Box<dyn Fn(usize) -> Vec<Entry>>> = vec![
                Box::new(move |k| vec![e(i, k, false), e(j, k, true)]),
                Box::new(move |k| vec![e(k, i, true), e(k, j, false)]),
                Box::new(move |k| vec![e(k, i, false), e(k, j, true)]),
                Box::new(move |k| vec![e(i, k, true), e(j, k, false)]),
            ];
            for (s, shape) in shapes.iter().enumerate() {
                if !complex && s >= 2 {
                    continue;
                }
                let mut terms: Vec<(i64, Vec<Entry>)> = (1..=n).map(|k| (1, shape(k))).collect();
                terms.extend(delta(i, j));
                out.push(Identity::new(terms));
            }
        }
    }
    out
}

fn pairs(n: usize, complex: bool) -> Vec<(Entry, Entry)> {
    let ls = letters(n, complex);
    ls.iter()
        .flat_map(|&a| ls.iter().map(move |&b| (a, b)))
        .collect()
}

fn triples(n: usize, complex: bool) -> Vec<(Entry, Entry, Entry)> {
    let ls = letters(n, complex);
    let mut out = Vec::with_capacity(ls.len().pow(3));
    for &a in &ls {
        for &b in &ls {
            for &c in &ls {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn span(a: Entry, b: Entry, c: Entry) -> (usize, usize) {
    let mut rows = vec![a.row, b.row, c.row];
    let mut cols = vec![a.col, b.col, c.col];
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    (rows.len(), cols.len())
}

/// Sign table of the twisted half-commutation: − exactly when one of
/// (r, s) is 3 and the other is at most 2.
fn twisted_half_sign(r: usize, s: usize) -> i64 {
    const TABLE: [[i64; 3]; 3] = [[1, 1, -1], [1, 1, -1], [-1, -1, 1]];
    TABLE[r - 1][s - 1]
}

fn commutation(n: usize, complex: bool) -> Vec<Identity> {
    pairs(n, complex)
        .into_iter()
        .filter(|(a, b)| a < b)
        .map(|(a, b)| Identity::difference(vec![a, b], 1, vec![b, a]))
        .collect()
}

fn twisted_commutation(n: usize, complex: bool) -> Vec<Identity> {
    pairs(n, complex)
        .into_iter()
        .filter(|(a, b)| a < b)
        .map(|(a, b)| {
            let sign = if a.with_star(false).same_line(b.with_star(false)) {
                -1
            } else {
                1
            };
            Identity::difference(vec![a, b], sign, vec![b, a])
        })
        .collect()
}

fn half_commutation(n: usize, complex: bool, twisted: bool) -> Vec<Identity> {
    triples(n, complex)
        .into_iter()
        .filter(|(a, _, c)| a < c)
        .map(|(a, b, c)| {
            let sign = if twisted {
                let (r, s) = span(a, b, c);
                twisted_half_sign(r, s)
            } else {
                1
            };
            Identity::difference(vec![a, b, c], sign, vec![c, b, a])
        })
        .collect()
}

/// `ab = 0` for distinct entries on a common row or column.
fn line_orthogonality(n: usize, complex: bool) -> Vec<Identity> {
    pairs(n, complex)
        .into_iter()
        .filter(|(a, b)| a.with_star(false).same_line(b.with_star(false)))
        .map(|(a, b)| Identity::monomial(vec![a, b]))
        .collect()
}

/// `abc = 0` when a ≠ c lie on a common row or column.
fn vanishing_triples(n: usize, complex: bool) -> Vec<Identity> {
    triples(n, complex)
        .into_iter()
        .filter(|(a, _, c)| a.with_star(false).same_line(c.with_star(false)))
        .map(|(a, b, c)| Identity::monomial(vec![a, b, c]))
        .collect()
}

fn partial_isometries(n: usize, complex: bool) -> Vec<Identity> {
    entries(n)
        .into_iter()
        .map(|a| {
            let middle = if complex { a.with_star(true) } else { a };
            Identity::difference(vec![a], 1, vec![a, middle, a])
        })
        .collect()
}

pub fn relation_set(id: RelationSetId, n: usize) -> Vec<Identity> {
    use RelationSetId::*;
    let complex = id.is_complex();
    let mut out = base_identities(n, complex);
    match id {
        O | U => out.extend(commutation(n, complex)),
        Obar | Ubar => out.extend(twisted_commutation(n, complex)),
        Ostar | Ustar => out.extend(half_commutation(n, complex, false)),
        Obarstar | Ubarstar => out.extend(half_commutation(n, complex, true)),
        H | K => {
            out.extend(commutation(n, complex));
            out.extend(line_orthogonality(n, complex));
        }
        Hstar | Kstar => {
            out.extend(half_commutation(n, complex, false));
            out.extend(line_orthogonality(n, complex));
        }
        Hinf | Kinf => out.extend(vanishing_triples(n, complex)),
        Hplus | Kplus => {
            out.extend(partial_isometries(n, complex));
            out.extend(line_orthogonality(n, complex));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CheckOutcome {
    Pass,
    Violation { identity: String },
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

pub fn check_identities<A: NcAlgebra>(
    u: &QuantumMatrix<A>,
    identities: &[Identity],
) -> CheckOutcome {
    identities
        .iter()
        .find(|ident| !ident.evaluate(u).is_zero())
        .map_or(CheckOutcome::Pass, |ident| CheckOutcome::Violation {
            identity: ident.to_string(),
        })
}

pub fn check_matrix<A: NcAlgebra>(u: &QuantumMatrix<A>, id: RelationSetId) -> CheckOutcome {
    check_identities(u, &relation_set(id, u.n()))
}

pub fn is_monomial(u: &Matrix<Scalar>) -> bool {
    if !u.is_square() {
        return false;
    }
    let n = u.rows();
    let row_ok = (0..n).all(|r| (0..n).filter(|&c| !Zero::is_zero(u.get(r, c))).count() == 1);
    let col_ok = (0..n).all(|c| (0..n).filter(|&r| !Zero::is_zero(u.get(r, c))).count() == 1);
    row_ok && col_ok
}

/// Number of coaction relation families.
pub const COACTION_FAMILIES: usize = 5;

/// One of the five relation families (numbered 1 to 5) for a coaction on
/// the degree-two half-liberated polygonal sphere:
/// 1. `u_ia u_ja u_kb + u_ib u_ja u_ka = 0`, i, j, k distinct
/// 2. `u_ia u_jb u_ka = 0`, i, j, k distinct
/// 3. `u_ia² u_kb = u_kb u_ia²`
/// 4. `u_ka u_ia u_ib = u_ib u_ia u_ka`
/// 5. `u_ia u_ib u_ka = u_kb u_ib u_ia`
pub fn coaction_family(n: usize, family: usize) -> Result<Vec<Identity>> {
    if n < 3 {
        return Err(Error::Dimension(format!("needs N >= 3, got {n}")));
    }
    let u = Entry::new;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let distinct = i != j && j != k && i != k;
                for a in 1..=n {
                    for b in 1..=n {
                        match family {
                            1 if distinct => out.push(Identity::new(vec![
                                (1, vec![u(i, a), u(j, a), u(k, b)]),
                                (1, vec![u(i, b), u(j, a), u(k, a)]),
                            ])),
                            2 if distinct => {
                                out.push(Identity::monomial(vec![u(i, a), u(j, b), u(k, a)]))
                            }
                            // Families 3 to 5 only involve i and k.
                            3 if j == 1 => out.push(Identity::difference(
                                vec![u(i, a), u(i, a), u(k, b)],
                                1,
                                vec![u(k, b), u(i, a), u(i, a)],
                            )),
                            4 if j == 1 => out.push(Identity::difference(
                                vec![u(k, a), u(i, a), u(i, b)],
                                1,
                                vec![u(i, b), u(i, a), u(k, a)],
                            )),
                            5 if j == 1 => out.push(Identity::difference(
                                vec![u(i, a), u(i, b), u(k, a)],
                                1,
                                vec![u(k, b), u(i, b), u(i, a)],
                            )),
                            1..=COACTION_FAMILIES => {}
                            _ => {
                                return Err(Error::Precondition(format!(
                                    "no relation family {family}"
                                )))
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn coaction_relations(n: usize) -> Result<Vec<Identity>> {
    let mut out = Vec::new();
    for f in 1..=COACTION_FAMILIES {
        out.extend(coaction_family(n, f)?);
    }
    Ok(out)
}

/// First violated identity across the five families, tagged with its family.
pub fn check_coaction<A: NcAlgebra>(u: &QuantumMatrix<A>) -> Result<CheckOutcome> {
    for f in 1..=COACTION_FAMILIES {
        if let CheckOutcome::Violation { identity } =
            check_identities(u, &coaction_family(u.n(), f)?)
        {
            return Ok(CheckOutcome::Violation {
                identity: format!("({f}) {identity}"),
            });
        }
    }
    Ok(CheckOutcome::Pass)
}
