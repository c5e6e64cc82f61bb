use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

use super::perm::{Permutation, Subgroup};

/// A filtered family `G = (G_k)` truncated at level `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredFamily {
    cap: usize,
    levels: BTreeMap<usize, BTreeSet<Permutation>>,
}

impl FilteredFamily {
    /// Identity at every level.
    pub fn trivial(cap: usize) -> FilteredFamily {
        FilteredFamily {
            cap,
            levels: (1..=cap)
                .map(|k| (k, BTreeSet::from([Permutation::identity(k)])))
                .collect(),
        }
    }

    /// The full symmetric groups S_1, …, S_cap.
    pub fn full(cap: usize) -> FilteredFamily {
        FilteredFamily {
            cap,
            levels: (1..=cap)
                .map(|k| (k, Permutation::all(k).into_iter().collect()))
                .collect(),
        }
    }

    /// The parity-preserving permutations at each level.
    pub fn half_liberated(cap: usize) -> FilteredFamily {
        FilteredFamily {
            cap,
            levels: (1..=cap)
                .map(|k| {
                    let set = Permutation::all(k)
                        .into_iter()
                        .filter(Permutation::is_half_liberated)
                        .collect();
                    (k, set)
                })
                .collect(),
        }
    }

    /// Smallest family containing `generators` that is closed under group
    /// and tensor operations.
    pub fn generated_by(cap: usize, generators: &[Permutation]) -> Result<FilteredFamily> {
        let mut fam = FilteredFamily::trivial(cap);
        for g in generators {
            if g.size() == 0 || g.size() > cap {
                return Err(Error::LevelTooLarge {
                    level: g.size(),
                    max: cap,
                });
            }
            fam.levels
                .get_mut(&g.size())
                .expect("level exists")
                .insert(g.clone());
        }
        fam.close(false);
        Ok(fam)
    }

    /// Wraps explicit levels without closing them.
    pub fn from_levels(
        cap: usize,
        levels: BTreeMap<usize, BTreeSet<Permutation>>,
    ) -> Result<FilteredFamily> {
        let mut fam = FilteredFamily::trivial(cap);
        for (k, set) in levels {
            if k == 0 || k > cap {
                return Err(Error::LevelTooLarge { level: k, max: cap });
            }
            if let Some(p) = set.iter().find(|p| p.size() != k) {
                return Err(Error::SizeMismatch {
                    left: k,
                    right: p.size(),
                });
            }
            fam.levels.get_mut(&k).expect("level exists").extend(set);
        }
        Ok(fam)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn level(&self, k: usize) -> Option<&BTreeSet<Permutation>> {
        self.levels.get(&k)
    }

    pub fn levels(&self) -> &BTreeMap<usize, BTreeSet<Permutation>> {
        &self.levels
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.values().map(BTreeSet::len).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.levels.get(&p.size()).is_some_and(|s| s.contains(p))
    }

    /// Checks the filtered-group axioms directly.
    pub fn is_filtered_group(&self) -> bool {
        let groups = self.levels.iter().all(|(&k, set)| {
            set.contains(&Permutation::identity(k))
                && set.iter().all(|a| {
                    set.contains(&a.inverse())
                        && set.iter().all(|b| set.contains(&a.then_unchecked(b)))
                })
        });
        groups && self.tensor_products().iter().all(|p| self.contains(p))
    }

    /// True when every admissible weak reduction stays in the family.
    pub fn is_weakly_saturated(&self) -> bool {
        self.reductions().iter().all(|p| self.contains(p))
    }

    fn tensor_products(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        for (&a, left) in &self.levels {
            for (&b, right) in &self.levels {
                if a + b > self.cap {
                    continue;
                }
                for x in left {
                    for y in right {
                        out.push(x.tensor(y));
                    }
                }
            }
        }
        out
    }

    fn reductions(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        for set in self.levels.values() {
            for p in set {
                for i in p.adjacent_positions() {
                    let r = p.weak_reduce(i).expect("position is adjacent");
                    if r.size() > 0 {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    /// Least fixpoint under group closure per level, tensor products within
    /// the cap and, when `weak` is set, weak reductions.
    fn close(&mut self, weak: bool) {
        loop {
            let mut extra = self.tensor_products();
            if weak {
                extra.extend(self.reductions());
            }
            let mut changed = false;
            let mut next = BTreeMap::new();
            for (&k, set) in &self.levels {
                let mut group = Subgroup::trivial(k);
                for p in set.iter().chain(extra.iter().filter(|p| p.size() == k)) {
                    group.add(p);
                }
                let closed = group.into_set();
                changed |= closed.len() != set.len();
                next.insert(k, closed);
            }
            self.levels = next;
            if !changed {
                break;
            }
        }
    }

    pub fn weak_saturation_closure(&self) -> FilteredFamily {
        let mut out = self.clone();
        out.close(true);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_closure_is_trivial() {
        let t = FilteredFamily::trivial(5);
        assert_eq!(t.weak_saturation_closure(), t);
        assert!(t.is_filtered_group());
    }

    #[test]
    fn crossing_closure_is_full() {
        let fam = FilteredFamily::generated_by(4, &[perm("(21)")]).unwrap();
        let closed = fam.weak_saturation_closure();
        assert_eq!(closed, FilteredFamily::full(4));
        // Oracle: S_k from adjacent transpositions.
        for k in 2..=4 {
            let gens: Vec<Permutation> = (0..k - 1)
                .map(|i| {
                    let mut m: Vec<usize> = (0..k).collect();
                    m.swap(i, i + 1);
                    Permutation::from_zero_based(m).unwrap()
                })
                .collect();
            let g = super::super::generated_group(&gens, k).unwrap();
            assert_eq!(closed.level(k).unwrap(), &g.elements());
        }
    }

    #[test]
    fn half_liberated_closure_stays_parity_preserving() {
        let fam = FilteredFamily::generated_by(6, &[perm("(321)")]).unwrap();
        let closed = fam.weak_saturation_closure();
        assert_eq!(closed.level_sizes(), vec![1, 1, 2, 4, 12, 36]);
        assert!(closed
            .levels()
            .values()
            .flatten()
            .all(Permutation::is_half_liberated));
        assert_eq!(closed, FilteredFamily::half_liberated(6));
    }

    #[test]
    fn standard_families_are_fixpoints() {
        for fam in [
            FilteredFamily::trivial(6),
            FilteredFamily::half_liberated(6),
            FilteredFamily::full(6),
        ] {
            assert!(fam.is_filtered_group());
            assert!(fam.is_weakly_saturated());
            assert_eq!(fam.weak_saturation_closure(), fam);
        }
    }

    #[test]
    fn generators_beyond_cap_are_rejected() {
        assert!(FilteredFamily::generated_by(2, &[perm("(321)")]).is_err());
    }
}
