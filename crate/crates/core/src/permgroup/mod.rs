//! Permutations, generated groups, filtered families and the searches built
//! on them.
//!
//! Composition convention: `a.compose(&b)` is `a ∘ b`, i.e. `i ↦ a(b(i))`.
//! Claims that depend on a product order are checked through membership in
//! generated groups, which is independent of this choice.

mod family;
mod param;
mod perm;
mod search;

pub use family::FilteredFamily;
pub use param::{
    parametrize_level, twist_vanish_degree, CoarseningMode, VanishDegree, MAX_PARAM_LEVEL,
};
pub use perm::{generated_group, GeneratedGroup, Permutation, Subgroup};
pub use search::{adjacency_witness, AdjacencyWitness, MAX_SEARCH_LEVEL};
