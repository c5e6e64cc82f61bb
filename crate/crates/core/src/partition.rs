//! Set partitions of a two-row point set, kernels, coarsenings and the
//! signature of even partitions.
//!
//! Points are numbered `1..=k` on the upper row and `k+1..=k+l` on the lower
//! row, both left to right. Crossings and switches are read in the clockwise
//! order: upper row left to right, then lower row right to left.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(count: usize) -> Sign {
        if count.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    upper: usize,
    lower: usize,
    labels: Vec<usize>,
}

/// Relabel by first occurrence, starting at 0.
fn normalize<T: Eq + Hash + Clone>(raw: &[T]) -> Vec<usize> {
    let mut seen: HashMap<T, usize> = HashMap::new();
    raw.iter()
        .map(|v| {
            let next = seen.len();
            *seen.entry(v.clone()).or_insert(next)
        })
        .collect()
}

impl Partition {
    /// Builds a partition from blocks of 1-based points.
    pub fn new(upper: usize, lower: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        let total = upper + lower;
        let mut raw = vec![usize::MAX; total];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock { index: b });
            }
            for &p in block {
                if p == 0 || p > total {
                    return Err(Error::PointOutOfRange { point: p, total });
                }
                if raw[p - 1] != usize::MAX {
                    return Err(Error::OverlappingBlocks { point: p });
                }
                raw[p - 1] = b;
            }
        }
        if let Some(missing) = raw.iter().position(|&v| v == usize::MAX) {
            return Err(Error::MissingPoint { point: missing + 1 });
        }
        Ok(Partition {
            upper,
            lower,
            labels: normalize(&raw),
        })
    }

    /// Any labelling in row order; labels are normalized.
    pub fn from_labels<T: Eq + Hash + Clone>(
        upper: usize,
        lower: usize,
        raw: &[T],
    ) -> Result<Partition> {
        if raw.len() != upper + lower {
            return Err(Error::SizeMismatch {
                left: upper + lower,
                right: raw.len(),
            });
        }
        Ok(Partition {
            upper,
            lower,
            labels: normalize(raw),
        })
    }

    /// Joins positions carrying equal values.
    pub fn kernel<T: Eq + Hash + Clone>(upper: &[T], lower: &[T]) -> Partition {
        let raw: Vec<T> = upper.iter().chain(lower).cloned().collect();
        Partition {
            upper: upper.len(),
            lower: lower.len(),
            labels: normalize(&raw),
        }
    }

    /// `kernel((1..k), (σ(1)..σ(k)))`: upper point j meets lower point σ⁻¹(j).
    pub fn pair_partition(sigma: &Permutation) -> Partition {
        let k = sigma.size();
        let upper: Vec<usize> = (1..=k).collect();
        let lower: Vec<usize> = (1..=k).map(|i| sigma.image(i)).collect();
        Partition::kernel(&upper, &lower)
    }

    /// Partition with every point in its own block.
    pub fn singletons(upper: usize, lower: usize) -> Partition {
        Partition {
            upper,
            lower,
            labels: (0..upper + lower).collect(),
        }
    }

    pub fn upper_count(&self) -> usize {
        self.upper
    }

    pub fn lower_count(&self) -> usize {
        self.lower
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn upper_labels(&self) -> &[usize] {
        &self.labels[..self.upper]
    }

    pub fn lower_labels(&self) -> &[usize] {
        &self.labels[self.upper..]
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks as sorted lists of 1-based points, ordered by smallest point.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (p, &b) in self.labels.iter().enumerate() {
            out[b].push(p + 1);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.blocks().iter().all(|b| b.len() % 2 == 0)
    }

    /// Position of a 0-based row-order point in the clockwise order.
    pub fn flattened_position(&self, point: usize) -> usize {
        flattened_position(self.upper, self.lower, point)
    }

    /// Labels read in clockwise order.
    pub fn flattened_labels(&self) -> Vec<usize> {
        let mut out = self.labels[..self.upper].to_vec();
        out.extend(self.labels[self.upper..].iter().rev());
        out
    }

    /// Inverse of [`Partition::flattened_labels`].
    pub fn from_flattened<T: Eq + Hash + Clone>(
        upper: usize,
        lower: usize,
        seq: &[T],
    ) -> Result<Partition> {
        if seq.len() != upper + lower {
            return Err(Error::SizeMismatch {
                left: upper + lower,
                right: seq.len(),
            });
        }
        let mut raw = seq[..upper].to_vec();
        raw.extend(seq[upper..].iter().rev().cloned());
        Partition::from_labels(upper, lower, &raw)
    }

    pub fn is_noncrossing(&self) -> bool {
        sequence_is_noncrossing(&self.flattened_labels())
    }

    /// True when every block of `finer` lies inside a block of `self`.
    pub fn is_coarser_or_equal(&self, finer: &Partition) -> bool {
        if (self.upper, self.lower) != (finer.upper, finer.lower) {
            return false;
        }
        let mut image: HashMap<usize, usize> = HashMap::new();
        finer
            .labels
            .iter()
            .zip(&self.labels)
            .all(|(&f, &c)| *image.entry(f).or_insert(c) == c)
    }

    fn first_odd_block(&self) -> Option<Vec<usize>> {
        self.blocks().into_iter().find(|b| b.len() % 2 == 1)
    }

    /// The signature of an even partition.
    ///
    /// Sorting the clockwise label sequence into contiguous runs, one per
    /// block, by adjacent transpositions is a switch sequence ending at a
    /// noncrossing partition; its length is the number of inversions.
    pub fn signature(&self) -> Result<Sign> {
        if let Some(block) = self.first_odd_block() {
            return Err(Error::OddBlock { block });
        }
        let seq = self.flattened_labels();
        let mut inversions = 0usize;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] > seq[j] {
                    inversions += 1;
                }
            }
        }
        Ok(Sign::from_parity(inversions))
    }

    /// Signature by breadth-first search over switches to the nearest
    /// noncrossing partition; also returns the number of switches used.
    pub fn signature_bfs(&self) -> Result<(Sign, usize)> {
        if let Some(block) = self.first_odd_block() {
            return Err(Error::OddBlock { block });
        }
        let start = normalize(&self.flattened_labels());
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([(start, 0usize)]);
        while let Some((seq, depth)) = queue.pop_front() {
            if sequence_is_noncrossing(&seq) {
                return Ok((Sign::from_parity(depth), depth));
            }
            for next in switch_neighbours(&seq) {
                if seen.insert(next.clone()) {
                    queue.push_back((next, depth + 1));
                }
            }
        }
        unreachable!("grouped arrangements are noncrossing and reachable")
    }

    /// Depths at which the switch graph of `self` meets noncrossing
    /// partitions, exploring the whole connected component.
    pub fn switch_levels(&self) -> BTreeSet<usize> {
        let start = normalize(&self.flattened_labels());
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([(start, 0usize)]);
        let mut levels = BTreeSet::new();
        while let Some((seq, depth)) = queue.pop_front() {
            if sequence_is_noncrossing(&seq) {
                levels.insert(depth);
            }
            for next in switch_neighbours(&seq) {
                if seen.insert(next.clone()) {
                    queue.push_back((next, depth + 1));
                }
            }
        }
        levels
    }

    /// Swaps the points at clockwise positions `pos` and `pos + 1` when they
    /// lie in different blocks.
    pub fn switch(&self, pos: usize) -> Option<Partition> {
        let mut seq = self.flattened_labels();
        if pos + 1 >= seq.len() || seq[pos] == seq[pos + 1] {
            return None;
        }
        seq.swap(pos, pos + 1);
        Partition::from_flattened(self.upper, self.lower, &seq).ok()
    }

    /// Merges blocks according to a map from block label to new label.
    pub fn merge_blocks(&self, block_map: &[usize]) -> Partition {
        let raw: Vec<usize> = self.labels.iter().map(|&b| block_map[b]).collect();
        Partition {
            upper: self.upper,
            lower: self.lower,
            labels: normalize(&raw),
        }
    }

    /// Every partition obtained by merging blocks, `self` first.
    pub fn coarsenings(&self) -> Coarsenings<'_> {
        Coarsenings {
            base: self,
            rgs: Some((0..self.block_count()).collect()),
            started: false,
        }
    }
}

pub fn flattened_position(upper: usize, lower: usize, point: usize) -> usize {
    if point < upper {
        point
    } else {
        upper + (lower - 1 - (point - upper))
    }
}

fn switch_neighbours(seq: &[usize]) -> Vec<Vec<usize>> {
    (0..seq.len().saturating_sub(1))
        .filter(|&i| seq[i] != seq[i + 1])
        .map(|i| {
            let mut next = seq.to_vec();
            next.swap(i, i + 1);
            normalize(&next)
        })
        .collect()
}

/// Stack test: a block may only be revisited when it is the innermost open one.
pub fn sequence_is_noncrossing(seq: &[usize]) -> bool {
    let mut remaining: HashMap<usize, usize> = HashMap::new();
    for &b in seq {
        *remaining.entry(b).or_default() += 1;
    }
    let mut stack: Vec<usize> = Vec::new();
    let mut opened: HashSet<usize> = HashSet::new();
    for &b in seq {
        if opened.contains(&b) {
            if stack.last() != Some(&b) {
                return false;
            }
        } else {
            opened.insert(b);
            stack.push(b);
        }
        let r = remaining.get_mut(&b).expect("counted above");
        *r -= 1;
        if *r == 0 {
            stack.pop();
        }
    }
    true
}

/// Iterator over coarsenings via restricted-growth strings on the blocks,
/// in reverse lexicographic order from `0,1,…,m-1` (the base) to all zeros.
pub struct Coarsenings<'a> {
    base: &'a Partition,
    rgs: Option<Vec<usize>>,
    started: bool,
}

impl Coarsenings<'_> {
    fn advance(&mut self) {
        let Some(rgs) = self.rgs.as_mut() else { return };
        let Some(i) = (1..rgs.len()).rev().find(|&i| rgs[i] > 0) else {
            self.rgs = None;
            return;
        };
        rgs[i] -= 1;
        let mut max = rgs[..=i].iter().copied().max().unwrap_or(0);
        for v in rgs.iter_mut().skip(i + 1) {
            max += 1;
            *v = max;
        }
    }
}

impl Iterator for Coarsenings<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.started {
            self.advance();
        }
        self.started = true;
        let rgs = self.rgs.as_ref()?;
        Some(self.base.merge_blocks(rgs))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |ls: &[usize]| {
            ls.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "{{{} | {}}}",
            row(self.upper_labels()),
            row(self.lower_labels())
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(k: usize, l: usize, blocks: &[&[usize]]) -> Partition {
        let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        Partition::new(k, l, &blocks).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Bell numbers from the triangle recurrence.
    fn bell(n: usize) -> usize {
        let mut row = vec![1usize];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for v in &row {
                let last = *next.last().unwrap();
                next.push(last + v);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn construction_examples() {
        assert_eq!(p(2, 0, &[&[1], &[2]]).labels(), &[0, 1]);
        assert_eq!(p(2, 2, &[&[1, 4], &[2, 3]]).labels(), &[0, 1, 1, 0]);
        let empty = p(0, 0, &[]);
        assert!(empty.is_empty());
        assert_eq!(empty.block_count(), 0);
    }

    #[test]
    fn construction_errors_name_the_point() {
        let e = Partition::new(2, 0, &[vec![1, 2], vec![2]]).unwrap_err();
        assert!(matches!(e, Error::OverlappingBlocks { point: 2 }));
        let e = Partition::new(3, 0, &[vec![1, 2]]).unwrap_err();
        assert!(matches!(e, Error::MissingPoint { point: 3 }));
        let e = Partition::new(1, 0, &[vec![1], vec![]]).unwrap_err();
        assert!(matches!(e, Error::EmptyBlock { index: 1 }));
        let e = Partition::new(1, 0, &[vec![2]]).unwrap_err();
        assert!(matches!(e, Error::PointOutOfRange { point: 2, .. }));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(
            Partition::kernel(&[1, 2], &[2, 1]),
            p(2, 2, &[&[1, 4], &[2, 3]])
        );
        assert_eq!(Partition::kernel(&[1, 1], &[1, 1]).block_count(), 1);
        assert_eq!(
            Partition::kernel(&[1, 2, 1], &[1, 1, 2]),
            p(3, 3, &[&[1, 3, 4, 5], &[2, 6]])
        );
    }

    #[test]
    fn pair_partition_examples() {
        assert_eq!(
            Partition::pair_partition(&perm("(12)")),
            p(2, 2, &[&[1, 3], &[2, 4]])
        );
        assert_eq!(
            Partition::pair_partition(&perm("(21)")),
            p(2, 2, &[&[1, 4], &[2, 3]])
        );
        for s in Permutation::all(4) {
            let ids = [1, 2, 3, 4];
            let permuted: Vec<usize> = (1..=4).map(|i| s.image(i)).collect();
            assert_eq!(
                Partition::kernel(&ids, &permuted),
                Partition::pair_partition(&s)
            );
        }
    }

    #[test]
    fn noncrossing_examples() {
        assert!(p(2, 2, &[&[1, 2, 3, 4]]).is_noncrossing());
        assert!(!Partition::pair_partition(&perm("(21)")).is_noncrossing());
        assert!(Partition::singletons(3, 3).is_noncrossing());
        assert!(Partition::pair_partition(&perm("(123)")).is_noncrossing());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(
            p(2, 2, &[&[1, 3], &[2, 4]]).signature().unwrap(),
            Sign::Plus
        );
        assert_eq!(
            Partition::pair_partition(&perm("(21)"))
                .signature()
                .unwrap(),
            Sign::Minus
        );
        let e = p(1, 2, &[&[1, 2], &[3]]).signature().unwrap_err();
        assert!(matches!(e, Error::OddBlock { ref block } if block == &vec![3]));
    }

    #[test]
    fn signature_is_sgn_on_s5() {
        for k in 0..=5 {
            for s in Permutation::all(k) {
                let inv = (0..k)
                    .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                    .filter(|&(i, j)| s.image(i + 1) > s.image(j + 1))
                    .count();
                let pp = Partition::pair_partition(&s);
                assert_eq!(pp.signature().unwrap(), Sign::from_parity(inv), "{s}");
                assert_eq!(pp.signature_bfs().unwrap().0, Sign::from_parity(inv), "{s}");
            }
        }
    }

    #[test]
    fn coarsening_examples() {
        assert_eq!(p(1, 1, &[&[1, 2]]).coarsenings().count(), 1);
        assert_eq!(Partition::singletons(3, 0).coarsenings().count(), 5);
        let id2 = Partition::pair_partition(&perm("(12)"));
        let all: Vec<Partition> = id2.coarsenings().collect();
        assert_eq!(all, vec![id2.clone(), p(2, 2, &[&[1, 2, 3, 4]])]);
        assert_eq!(Partition::singletons(0, 0).coarsenings().count(), 1);
    }

    #[test]
    fn coarsening_counts_are_bell_numbers() {
        for m in 0..=6 {
            let base = Partition::singletons(m, 0);
            let all: BTreeSet<Partition> = base.coarsenings().collect();
            assert_eq!(all.len(), bell(m));
            assert_eq!(base.coarsenings().count(), bell(m));
            assert!(all.iter().all(|c| c.is_coarser_or_equal(&base)));
        }
    }

    #[test]
    fn text_rendering() {
        assert_eq!(
            Partition::pair_partition(&perm("(21)")).to_string(),
            "{0 1 | 1 0}"
        );
    }

    fn arb_partition(max_points: usize) -> impl Strategy<Value = Partition> {
        (0..=max_points)
            .prop_flat_map(|n| (0..=n, proptest::collection::vec(0..n.max(1), n)))
            .prop_map(|(k, raw)| Partition::from_labels(k, raw.len() - k, &raw).unwrap())
    }

    fn arb_even_partition(max_pairs: usize) -> impl Strategy<Value = Partition> {
        (1..=max_pairs)
            .prop_flat_map(|m| {
                (
                    proptest::collection::vec(0..m, m),
                    0..=2 * m,
                    Just((0..2 * m).collect::<Vec<usize>>()).prop_shuffle(),
                )
            })
            .prop_map(|(pair_block, k, order)| {
                // Pair up points in a random order, then merge pairs by `pair_block`.
                let mut raw = vec![0; order.len()];
                for (pair, chunk) in order.chunks(2).enumerate() {
                    for &pt in chunk {
                        raw[pt] = pair_block[pair];
                    }
                }
                Partition::from_labels(k, order.len() - k, &raw).unwrap()
            })
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(q in arb_partition(9)) {
            let again = Partition::from_labels(q.upper_count(), q.lower_count(), q.labels()).unwrap();
            prop_assert_eq!(&again, &q);
            let rebuilt = Partition::new(q.upper_count(), q.lower_count(), &q.blocks()).unwrap();
            prop_assert_eq!(&rebuilt, &q);
            prop_assert_eq!(q.labels().first().copied().unwrap_or(0), 0);
        }

        #[test]
        fn flattening_roundtrips(q in arb_partition(9)) {
            let back = Partition::from_flattened(q.upper_count(), q.lower_count(), &q.flattened_labels()).unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn bubble_and_bfs_signatures_agree(q in arb_even_partition(4)) {
            prop_assert_eq!(q.signature().unwrap(), q.signature_bfs().unwrap().0);
        }

        #[test]
        fn double_switch_preserves_signature(q in arb_even_partition(5), pos in 0usize..10) {
            if let Some(once) = q.switch(pos) {
                prop_assert_eq!(once.signature().unwrap(), -q.signature().unwrap());
                let twice = once.switch(pos).unwrap();
                prop_assert_eq!(twice.signature().unwrap(), q.signature().unwrap());
            }
        }

        #[test]
        fn kernel_coarser_than_pairing(k in 1usize..6, seed in any::<u64>(), vals in proptest::collection::vec(1usize..4, 6)) {
            let all = Permutation::all(k);
            let s = &all[(seed % all.len() as u64) as usize];
            let u = &vals[..k];
            let l: Vec<usize> = (1..=k).map(|i| u[s.image(i) - 1]).collect();
            prop_assert!(Partition::kernel(u, &l).is_coarser_or_equal(&Partition::pair_partition(s)));
        }
    }

    #[test]
    fn every_coarsening_is_a_kernel() {
        for k in 1..=4 {
            for s in Permutation::all(k) {
                let pp = Partition::pair_partition(&s);
                for c in pp.coarsenings() {
                    // Upper point j carries the merged label of its block.
                    let u: Vec<usize> = c.upper_labels().to_vec();
                    let l: Vec<usize> = (1..=k).map(|i| u[s.image(i) - 1]).collect();
                    assert_eq!(Partition::kernel(&u, &l), c);
                    assert!(c.block_count() <= k);
                }
            }
        }
    }
}
