use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Rational};

/// A coordinate `x_i`, or its adjoint when `star` is set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub star: bool,
}

impl Letter {
    pub fn plain(index: usize) -> Letter {
        Letter { index, star: false }
    }

    pub fn starred(index: usize) -> Letter {
        Letter { index, star: true }
    }

    pub fn adjoint(self) -> Letter {
        Letter {
            index: self.index,
            star: !self.star,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}{}", self.index, if self.star { "*" } else { "" })
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let s = s.trim();
        let (body, star) = match s.strip_suffix('*') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let index = body
            .strip_prefix('x')
            .or_else(|| body.strip_prefix('z'))
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|&i| i > 0)
            .ok_or_else(|| Error::Parse(format!("bad letter {s:?}")))?;
        Ok(Letter { index, star })
    }
}

/// A monomial; ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[usize]) -> Word {
        Word(indices.iter().map(|&i| Letter::plain(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverses and stars every letter.
    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.adjoint()).collect())
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn has_star(&self) -> bool {
        self.0.iter().any(|l| l.star)
    }

    /// All words of length exactly `len` over `alphabet`, in order.
    pub fn all_of_length(alphabet: &[Letter], len: usize) -> Vec<Word> {
        let mut sorted = alphabet.to_vec();
        sorted.sort();
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| {
                    sorted.iter().map(move |l| {
                        let mut v = w.0.clone();
                        v.push(*l);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A rational linear combination of words with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct WordCombo {
    terms: BTreeMap<Word, Rational>,
}

impl WordCombo {
    pub fn zero() -> WordCombo {
        WordCombo::default()
    }

    pub fn word(w: Word) -> WordCombo {
        WordCombo::term(w, Rational::one())
    }

    pub fn one() -> WordCombo {
        WordCombo::word(Word::empty())
    }

    pub fn term(w: Word, c: Rational) -> WordCombo {
        let mut out = WordCombo::zero();
        out.add_term(w, c);
        out
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest word in the (length, lex) order.
    pub fn leading(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &WordCombo) -> WordCombo {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WordCombo) -> WordCombo {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> WordCombo {
        if c.is_zero() {
            return WordCombo::zero();
        }
        WordCombo {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// `left · self · right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> WordCombo {
        WordCombo {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (left.concat(w).concat(right), v.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &WordCombo) -> WordCombo {
        let mut out = WordCombo::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }

    /// Scaled so that the leading coefficient is 1.
    pub fn monic(&self) -> WordCombo {
        match self.leading() {
            Some((_, c)) => self.scale(&(Rational::one() / c)),
            None => WordCombo::zero(),
        }
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().map(Word::max_index).max().unwrap_or(0)
    }

    pub fn has_star(&self) -> bool {
        self.terms.keys().any(Word::has_star)
    }
}

impl From<Word> for WordCombo {
    fn from(w: Word) -> WordCombo {
        WordCombo::word(w)
    }
}

impl fmt::Display for WordCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs.is_one() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else {
                write!(f, "{}*{w}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl Serialize for WordCombo {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for WordCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_order_is_length_then_lex() {
        assert!(w("x2") < w("x1.x1"));
        assert!(w("x1.x2") < w("x2.x1"));
        assert!(w("x1") < w("x1*"));
        assert!(Word::empty() < w("x1"));
    }

    #[test]
    fn word_text_roundtrip() {
        for s in ["1", "x1", "x1.x2*.x1", "x12*.x3"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert!("y1".parse::<Word>().is_err());
        assert!("x0".parse::<Word>().is_err());
        assert_eq!(w("x1.x2*").adjoint(), w("x2.x1*"));
    }

    #[test]
    fn combos_drop_zero_terms() {
        let mut c = WordCombo::word(w("x1.x2"));
        c.add_term(w("x2.x1"), int(-1));
        assert_eq!(c.len(), 2);
        c.add_term(w("x1.x2"), int(-1));
        assert_eq!(c.len(), 1);
        let z = c.sub(&c);
        assert!(z.is_zero());
        assert_eq!(c.to_string(), "-x2.x1");
        assert_eq!(c.monic().to_string(), "x2.x1");
    }

    #[test]
    fn words_of_length_enumerate_in_order() {
        let alpha = [Letter::plain(1), Letter::plain(2)];
        let ws = Word::all_of_length(&alpha, 3);
        assert_eq!(ws.len(), 8);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}
