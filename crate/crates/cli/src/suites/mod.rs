//! Case builders for every suite. A case is a named closure producing an
//! `Outcome`; the runner handles caching, timing and ordering.

mod groups;
mod quantum;
mod signature;
mod spheres;

use ncsphere_core::Error;

use crate::config::{SuiteConfig, SuiteName};
use crate::report::Outcome;

type Job = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Case {
    pub id: String,
    pub claim: String,
    /// Expensive closure or span work worth persisting.
    pub cached: bool,
    pub run: Job,
}

impl Case {
    fn new(
        id: impl Into<String>,
        claim: impl Into<String>,
        run: impl Fn() -> Outcome + Send + Sync + 'static,
    ) -> Case {
        Case {
            id: id.into(),
            claim: claim.into(),
            cached: false,
            run: Box::new(run),
        }
    }

    fn cached(mut self) -> Case {
        self.cached = true;
        self
    }
}

/// Budget and level guards become skips; anything else is a failure.
fn guarded(f: impl FnOnce() -> ncsphere_core::Result<Outcome>) -> Outcome {
    match f() {
        Ok(o) => o,
        Err(
            e @ (Error::LevelTooLarge { .. } | Error::Budget { .. } | Error::DegreeOverflow { .. }),
        ) => Outcome::skip(e.to_string()),
        Err(e) => Outcome::check(false, serde_json::json!({ "error": e.to_string() })),
    }
}

pub fn cases(suite: SuiteName, config: &SuiteConfig) -> Vec<Case> {
    match suite {
        SuiteName::SignatureCalculus => signature::cases(config),
        SuiteName::AdjacencyWitness => groups::adjacency_cases(config),
        SuiteName::Parametrization => groups::parametrization_cases(config),
        SuiteName::VanishDegree => groups::vanish_cases(config),
        SuiteName::WeakSaturation => groups::saturation_cases(config),
        SuiteName::SphereIntersections => spheres::intersection_cases(config),
        SuiteName::Independence => spheres::independence_cases(config),
        SuiteName::QuantumRelations => quantum::cases(config),
        SuiteName::All => SuiteName::MEMBERS
            .iter()
            .flat_map(|&s| cases(s, config))
            .collect(),
    }
}
