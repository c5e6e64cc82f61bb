//! Relation checkers for quantum groups on concrete matrices, partition
//! maps `T_p` and intertwiner tests.

mod diagrams;
mod relations;
mod samples;

pub use diagrams::{
    cap, cup, intertwines, leg_bent_matrix, partition_compose, rotate_partition, tpi_matrix,
    vanishing_diagram, TPI_ENTRY_BUDGET,
};
pub use relations::{
    check_coaction, check_identities, check_matrix, coaction_family, coaction_relations,
    is_monomial, relation_set, CheckOutcome, Entry, Identity, QuantumMatrix, RelationSetId,
    COACTION_FAMILIES,
};
pub use samples::{pythagorean_rotation, random_orthogonal, signed_permutation_matrices};
