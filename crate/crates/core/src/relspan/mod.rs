//! Sphere presentations over the free *-algebra and a degree-truncated ideal
//! span that answers membership with re-checkable certificates.

mod presentation;
mod probe;
mod span;
mod word;

pub use presentation::{
    instantiate_relations, Family, Field, Relation, SphereClass, SpherePresentation,
};
pub use probe::{saturation_probe, ProbeOutcome};

pub use span::{
    intersect_equal, CertTerm, Certificate, Derivation, IdealSpan, IntersectionVerdict,
    DEFAULT_COLUMN_BUDGET,
};
pub use word::{Letter, Word, WordCombo};
