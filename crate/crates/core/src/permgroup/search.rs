use serde::Serialize;

use crate::error::{Error, Result};

use super::perm::{generated_group, Permutation};

/// Levels above this are exploration only.
pub const MAX_SEARCH_LEVEL: usize = 7;

/// An element τ of `<1⊗σ, σ⊗1>` with τ(i+1) = τ(i) ± 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjacencyWitness {
    pub sigma: Permutation,
    pub tau: Permutation,
    /// Generator indices: 0 is `1⊗σ`, 1 is `σ⊗1`.
    pub word: Vec<usize>,
    pub depth: usize,
    /// 1-based position.
    pub position: usize,
    pub reduction: Permutation,
    /// The reduction is not the identity.
    pub productive: bool,
    pub group_order: usize,
}

impl AdjacencyWitness {
    pub fn word_text(&self) -> String {
        let names: Vec<&str> = self
            .word
            .iter()
            .map(|&g| if g == 0 { "1⊗σ" } else { "σ⊗1" })
            .collect();
        names.join(" · ")
    }
}

/// Breadth-first search of `<1⊗σ, σ⊗1> ⊂ S_{k+1}` (depth, then one-line
/// order, then position) for τ ≠ id with an adjacent pair whose weak
/// reduction is not the identity. When no such τ exists the first τ with any
/// adjacent pair is returned, marked non-productive. `None` is a finding.
pub fn adjacency_witness(sigma: &Permutation) -> Result<Option<AdjacencyWitness>> {
    if sigma.is_identity() {
        return Err(Error::IdentityInput);
    }
    if sigma.size() > MAX_SEARCH_LEVEL {
        return Err(Error::LevelTooLarge {
            level: sigma.size(),
            max: MAX_SEARCH_LEVEL,
        });
    }
    let one = Permutation::identity(1);
    let gens = [one.tensor(sigma), sigma.tensor(&one)];
    let group = generated_group(&gens, sigma.size() + 1)?;
    let mut fallback = None;
    for (depth, layer) in group.layers.iter().enumerate().skip(1) {
        for tau in layer {
            for position in tau.adjacent_positions() {
                let reduction = tau.weak_reduce(position)?;
                let productive = !reduction.is_identity();
                let witness = AdjacencyWitness {
                    sigma: sigma.clone(),
                    tau: tau.clone(),
                    word: group.words[tau].clone(),
                    depth,
                    position,
                    reduction,
                    productive,
                    group_order: group.len(),
                };
                if productive {
                    return Ok(Some(witness));
                }
                fallback.get_or_insert(witness);
            }
        }
    }
    Ok(fallback)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn witness_examples() {
        let w = adjacency_witness(&perm("(231)")).unwrap().unwrap();
        assert_eq!(w.tau, perm("(2143)"));
        assert!(w.productive);
        let w = adjacency_witness(&perm("(42513)")).unwrap().unwrap();
        assert_eq!(w.tau, perm("(435621)"));
        let w = adjacency_witness(&perm("(21)")).unwrap().unwrap();
        assert!(w.depth <= 1);
        assert!(!w.productive);
    }

    #[test]
    fn identity_is_rejected() {
        assert!(matches!(
            adjacency_witness(&Permutation::identity(3)),
            Err(Error::IdentityInput)
        ));
    }

    #[test]
    fn words_evaluate_to_witness() {
        let s = perm("(3412)");
        let w = adjacency_witness(&s).unwrap().unwrap();
        let one = Permutation::identity(1);
        let gens = [one.tensor(&s), s.tensor(&one)];
        let tau = w.word.iter().fold(Permutation::identity(5), |acc, &g| {
            acc.compose(&gens[g]).unwrap()
        });
        assert_eq!(tau, w.tau);
        assert_eq!(w.tau.weak_reduce(w.position).unwrap(), w.reduction);
    }
}
