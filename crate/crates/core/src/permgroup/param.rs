use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, Sign};

use super::perm::Permutation;

pub const MAX_PARAM_LEVEL: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoarseningMode {
    /// Every coarsening of the pairing.
    AllCoarsenings,
    /// Only coarsenings with exactly two blocks.
    TwoBlock,
}

/// σ ∈ S_k such that every (two-block) coarsening of its pairing has
/// signature +1.
pub fn parametrize_level(k: usize, mode: CoarseningMode) -> Result<BTreeSet<Permutation>> {
    if k > MAX_PARAM_LEVEL {
        return Err(Error::LevelTooLarge {
            level: k,
            max: MAX_PARAM_LEVEL,
        });
    }
    let mut out = BTreeSet::new();
    for sigma in Permutation::all(k) {
        let pairing = Partition::pair_partition(&sigma);
        let mut ok = true;
        for c in pairing.coarsenings() {
            if mode == CoarseningMode::TwoBlock && c.block_count() != 2 {
                continue;
            }
            if c.signature()? == Sign::Minus {
                ok = false;
                break;
            }
        }
        if ok {
            out.insert(sigma);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishDegree {
    /// Fewest blocks of a coarsening with signature −1.
    pub blocks: usize,
    /// `blocks − 1`.
    pub degree: usize,
    pub witness: String,
}

pub fn twist_vanish_degree(sigma: &Permutation) -> Result<Option<VanishDegree>> {
    let pairing = Partition::pair_partition(sigma);
    let mut best: Option<Partition> = None;
    for c in pairing.coarsenings() {
        if best
            .as_ref()
            .is_some_and(|b| b.block_count() <= c.block_count())
        {
            continue;
        }
        if c.signature()? == Sign::Minus {
            best = Some(c);
        }
    }
    Ok(best.map(|b| VanishDegree {
        blocks: b.block_count(),
        degree: b.block_count() - 1,
        witness: b.to_string(),
    }))
}
