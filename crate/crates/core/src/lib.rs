//! Exact combinatorial and algebraic machinery for noncommutative polygonal
//! spheres and their quantum symmetry groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`]: two-row set partitions, kernels, coarsenings and the
//!   signature of even partitions.
//! * [`permgroup`]: permutations, filtered families, weak saturation and the
//!   finite searches built on top of them.
//! * [`relspan`]: sphere presentations over a free *-algebra and a
//!   degree-truncated ideal span with re-checkable certificates.
//! * [`models`]: exact matrix and point models of the spheres, word
//!   evaluation and linear-independence ranks.
//! * [`qcheck`]: relation checkers for the orthogonal, hyperoctahedral and
//!   unitary families, partition maps `T_p` and intertwiner tests.
//!
//! All arithmetic is exact (big rationals and Gaussian rationals).

pub mod error;
pub mod exact;
pub mod models;
pub mod partition;
pub mod permgroup;
pub mod qcheck;
pub mod relspan;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational, Scalar};
pub use partition::{Partition, Sign};
pub use permgroup::{FilteredFamily, Permutation};
