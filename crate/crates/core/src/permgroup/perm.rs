use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1..k}` in one-line form. Stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// From a 1-based one-line form.
    pub fn new(one_line: &[usize]) -> Result<Permutation> {
        let map: Vec<usize> = one_line.iter().map(|&v| v.wrapping_sub(1)).collect();
        Permutation::from_zero_based(map).map_err(|_| Error::NotAPermutation(one_line.to_vec()))
    }

    pub fn from_zero_based(map: Vec<usize>) -> Result<Permutation> {
        let k = map.len();
        let mut seen = vec![false; k];
        for &v in &map {
            if v >= k || seen[v] {
                return Err(Error::NotAPermutation(
                    map.iter().map(|v| v.wrapping_add(1)).collect(),
                ));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(k: usize) -> Permutation {
        Permutation {
            map: (0..k).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    /// σ(i) for 1-based i.
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|v| v + 1).collect()
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    /// Acts as `self` on the first k points and as `other`, shifted, on the rest.
    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let k = self.size();
        let mut map = self.map.clone();
        map.extend(other.map.iter().map(|v| v + k));
        Permutation { map }
    }

    pub fn inversions(&self) -> usize {
        let k = self.size();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| self.map[i] > self.map[j])
            .count()
    }

    pub fn is_even(&self) -> bool {
        self.inversions().is_multiple_of(2)
    }

    /// σ(i) ≡ i (mod 2) for all i.
    pub fn is_half_liberated(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| (i + v) % 2 == 0)
    }

    /// All 1-based positions i with σ(i+1) = σ(i) ± 1.
    pub fn adjacent_positions(&self) -> Vec<usize> {
        self.map
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0].abs_diff(w[1]) == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The least such position.
    pub fn adjacent_pair(&self) -> Option<usize> {
        self.adjacent_positions().first().copied()
    }

    /// Deletes positions i, i+1 and their values, then relabels in order.
    pub fn weak_reduce(&self, i: usize) -> Result<Permutation> {
        if i == 0 || i >= self.size() || self.map[i - 1].abs_diff(self.map[i]) != 1 {
            return Err(Error::NotAdjacent {
                position: i,
                perm: self.to_string(),
            });
        }
        let lo = self.map[i - 1].min(self.map[i]);
        let map = self
            .map
            .iter()
            .enumerate()
            .filter(|&(j, _)| j + 1 != i && j != i)
            .map(|(_, &v)| if v > lo { v - 2 } else { v })
            .collect();
        Ok(Permutation { map })
    }

    /// All of S_k in lexicographic order of one-line forms.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation { map: cur.clone() });
            // Next permutation in lexicographic order.
            let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// `(2413)`; comma-separated once any value has two digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        let sep = if self.size() > 9 { "," } else { "" };
        write!(f, "({})", parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Parse(format!("expected one-line form like (2413), got {s:?}"))
            })?;
        let values: Vec<usize> = if inner.contains(',') {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad permutation {s:?}")))?
        } else {
            inner
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))?
        };
        Permutation::new(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A generated subgroup with one generator word per element.
#[derive(Clone, Debug)]
pub struct GeneratedGroup {
    pub size: usize,
    pub generators: Vec<Permutation>,
    /// Breadth-first layers from the identity, each sorted by one-line form.
    pub layers: Vec<Vec<Permutation>>,
    /// Word in generator indices; the element is the product in word order.
    pub words: BTreeMap<Permutation, Vec<usize>>,
}

impl GeneratedGroup {
    pub fn contains(&self, p: &Permutation) -> bool {
        self.words.contains_key(p)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn elements(&self) -> BTreeSet<Permutation> {
        self.words.keys().cloned().collect()
    }

    /// Evaluates a word of generator indices.
    pub fn evaluate_word(&self, word: &[usize]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(self.size), |acc, &g| {
                acc.then_unchecked(&self.generators[g])
            })
    }

    /// Breadth-first depth of each element.
    pub fn depth(&self, p: &Permutation) -> Option<usize> {
        self.layers
            .iter()
            .position(|layer| layer.binary_search(p).is_ok())
    }
}

/// The subgroup of S_k generated by `generators`, explored breadth first
/// multiplying by generators on both sides.
pub fn generated_group(generators: &[Permutation], k: usize) -> Result<GeneratedGroup> {
    if let Some(g) = generators.iter().find(|g| g.size() != k) {
        return Err(Error::SizeMismatch {
            left: k,
            right: g.size(),
        });
    }
    let id = Permutation::identity(k);
    let mut words = BTreeMap::from([(id.clone(), Vec::new())]);
    let mut layers = vec![vec![id]];
    loop {
        let frontier = layers.last().expect("non-empty");
        let mut next: BTreeMap<Permutation, Vec<usize>> = BTreeMap::new();
        for g in frontier {
            let w = &words[g];
            for (s_idx, s) in generators.iter().enumerate() {
                let right = g.then_unchecked(s);
                if !words.contains_key(&right) && !next.contains_key(&right) {
                    let mut rw = w.clone();
                    rw.push(s_idx);
                    next.insert(right, rw);
                }
                let left = s.then_unchecked(g);
                if !words.contains_key(&left) && !next.contains_key(&left) {
                    let mut lw = vec![s_idx];
                    lw.extend_from_slice(w);
                    next.insert(left, lw);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next.keys().cloned().collect());
        words.extend(next);
    }
    Ok(GeneratedGroup {
        size: k,
        generators: generators.to_vec(),
        layers,
        words,
    })
}

/// Incrementally grown subgroup of S_k, used inside closure loops where
/// words are not needed.
#[derive(Clone, Debug)]
pub struct Subgroup {
    k: usize,
    gens: Vec<Permutation>,
    elements: HashSet<Permutation>,
}

impl Subgroup {
    pub fn trivial(k: usize) -> Subgroup {
        Subgroup {
            k,
            gens: Vec::new(),
            elements: HashSet::from([Permutation::identity(k)]),
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Adds `p`; returns false when it was already a member.
    pub fn add(&mut self, p: &Permutation) -> bool {
        debug_assert_eq!(p.size(), self.k);
        if self.elements.contains(p) {
            return false;
        }
        self.gens.push(p.clone());
        // Right multiplication by generators from every known element
        // reaches the whole group: inverses are positive powers.
        let mut frontier: Vec<Permutation> = self.elements.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for s in &self.gens {
                    let h = g.then_unchecked(s);
                    if self.elements.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        true
    }

    pub fn into_set(self) -> BTreeSet<Permutation> {
        self.elements.into_iter().collect()
    }

    pub fn to_set(&self) -> BTreeSet<Permutation> {
        self.elements.iter().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(perm("(2413)").one_line(), vec![2, 4, 1, 3]);
        assert_eq!(perm("(2413)").to_string(), "(2413)");
        assert!("(2213)".parse::<Permutation>().is_err());
        assert!("2413".parse::<Permutation>().is_err());
        let big = Permutation::identity(10);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert_eq!(perm("()"), Permutation::identity(0));
    }

    #[test]
    fn tensor_examples() {
        let one = Permutation::identity(1);
        assert_eq!(perm("(21)").tensor(&one), perm("(213)"));
        assert_eq!(one.tensor(&perm("(231)")), perm("(1342)"));
        assert!(Permutation::identity(2)
            .tensor(&Permutation::identity(3))
            .is_identity());
    }

    #[test]
    fn compose_examples() {
        let s = perm("(2413)");
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert_eq!(s.compose(&s).unwrap(), perm("(4321)"));
        assert!(matches!(
            s.compose(&perm("(21)")),
            Err(Error::SizeMismatch { left: 4, right: 2 })
        ));
        // The product 1⊗(231) · (231)⊗1 gives (2143) in one of the two orders.
        let one = Permutation::identity(1);
        let a = one.tensor(&perm("(231)"));
        let b = perm("(231)").tensor(&one);
        let products = [a.compose(&b).unwrap(), b.compose(&a).unwrap()];
        assert!(products.contains(&perm("(2143)")));
    }

    #[test]
    fn generated_group_examples() {
        let g = generated_group(&[], 3).unwrap();
        assert_eq!(g.elements(), BTreeSet::from([Permutation::identity(3)]));
        let g = generated_group(&[perm("(21)")], 2).unwrap();
        assert_eq!(g.len(), 2);
        let one = Permutation::identity(1);
        let s1 = perm("(3412)");
        let g = generated_group(&[one.tensor(&s1), s1.tensor(&one)], 5).unwrap();
        assert!(g.contains(&perm("(52143)")));
        for (p, w) in &g.words {
            assert_eq!(&g.evaluate_word(w), p);
        }
        assert!(generated_group(&[perm("(21)")], 3).is_err());
    }

    #[test]
    fn adjacent_pair_examples() {
        assert_eq!(perm("(2143)").adjacent_pair(), Some(1));
        assert_eq!(perm("(3412)").adjacent_pair(), Some(1));
        assert_eq!(perm("(2413)").adjacent_pair(), None);
    }

    #[test]
    fn weak_reduce_examples() {
        assert_eq!(perm("(2143)").weak_reduce(1).unwrap(), perm("(21)"));
        assert_eq!(perm("(2134)").weak_reduce(1).unwrap(), perm("(12)"));
        for i in 1..5 {
            assert!(Permutation::identity(5)
                .weak_reduce(i)
                .unwrap()
                .is_identity());
        }
        assert!(matches!(
            perm("(2413)").weak_reduce(1),
            Err(Error::NotAdjacent { .. })
        ));
    }

    #[test]
    fn half_liberated_examples() {
        assert!(perm("(321)").is_half_liberated());
        assert!(!perm("(21)").is_half_liberated());
        assert_eq!(
            Permutation::all(4)
                .iter()
                .filter(|p| p.is_half_liberated())
                .count(),
            4
        );
    }

    #[test]
    fn all_has_factorial_size_and_is_sorted() {
        let mut f = 1;
        for k in 0..=6 {
            if k > 0 {
                f *= k;
            }
            let all = Permutation::all(k);
            assert_eq!(all.len(), f);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (0..=max)
            .prop_flat_map(|k| Just((0..k).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|m| Permutation::from_zero_based(m).unwrap())
    }

    fn arb_pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
        (1..=max).prop_flat_map(|k| {
            let v = Just((0..k).collect::<Vec<usize>>());
            (v.clone().prop_shuffle(), v.prop_shuffle()).prop_map(|(a, b)| {
                (
                    Permutation::from_zero_based(a).unwrap(),
                    Permutation::from_zero_based(b).unwrap(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn weak_reduce_preserves_half_liberation(p in arb_perm(8)) {
            for i in p.adjacent_positions() {
                let r = p.weak_reduce(i).unwrap();
                prop_assert_eq!(r.size() + 2, p.size());
                if p.is_half_liberated() {
                    prop_assert!(r.is_half_liberated());
                }
            }
        }

        #[test]
        fn generated_group_is_convention_independent((a, b) in arb_pair(5)) {
            // Closing under the opposite order must give the same set.
            let g = generated_group(&[a.clone(), b.clone()], a.size()).unwrap();
            let flipped: Vec<Permutation> = [&a, &b].iter().map(|p| p.inverse()).collect();
            let h = generated_group(&flipped, a.size()).unwrap();
            prop_assert_eq!(g.elements(), h.elements());
            let mut sub = Subgroup::trivial(a.size());
            sub.add(&a);
            sub.add(&b);
            prop_assert_eq!(sub.into_set(), g.elements());
        }

        #[test]
        fn tensor_is_a_homomorphism((a, b) in arb_pair(4), (c, d) in arb_pair(3)) {
            let lhs = a.compose(&b).unwrap().tensor(&c.compose(&d).unwrap());
            let rhs = a.tensor(&c).compose(&b.tensor(&d)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_inverts(p in arb_perm(8)) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        }
    }
}
