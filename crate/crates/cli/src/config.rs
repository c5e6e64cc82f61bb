use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    SignatureCalculus,
    AdjacencyWitness,
    Parametrization,
    VanishDegree,
    WeakSaturation,
    SphereIntersections,
    Independence,
    QuantumRelations,
    All,
}

impl SuiteName {
    pub const MEMBERS: [SuiteName; 8] = [
        SuiteName::SignatureCalculus,
        SuiteName::AdjacencyWitness,
        SuiteName::Parametrization,
        SuiteName::VanishDegree,
        SuiteName::WeakSaturation,
        SuiteName::SphereIntersections,
        SuiteName::Independence,
        SuiteName::QuantumRelations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::SignatureCalculus => "signature-calculus",
            SuiteName::AdjacencyWitness => "adjacency-witness",
            SuiteName::Parametrization => "parametrization",
            SuiteName::VanishDegree => "vanish-degree",
            SuiteName::WeakSaturation => "weak-saturation",
            SuiteName::SphereIntersections => "sphere-intersections",
            SuiteName::Independence => "independence",
            SuiteName::QuantumRelations => "quantum-relations",
            SuiteName::All => "all",
        }
    }
}

/// Parameters that determine the report. Echoed into it and hashed into
/// cache keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SuiteConfig {
    pub n: usize,
    pub degree: usize,
    pub cap: usize,
    pub samples: usize,
    pub seed: u64,
    pub explore: bool,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            n: 3,
            degree: 4,
            cap: 6,
            samples: 1000,
            seed: 0,
            explore: false,
        }
    }
}

pub const MAX_N: usize = 8;
pub const MAX_DEGREE: usize = 6;
pub const MAX_CAP: usize = 8;

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(2..=MAX_N).contains(&self.n) {
            return Err(format!("--n must be in 2..={MAX_N}, got {}", self.n));
        }
        if !(1..=MAX_DEGREE).contains(&self.degree) {
            return Err(format!(
                "--degree must be in 1..={MAX_DEGREE}, got {}",
                self.degree
            ));
        }
        if !(2..=MAX_CAP).contains(&self.cap) {
            return Err(format!("--cap must be in 2..={MAX_CAP}, got {}", self.cap));
        }
        if self.samples == 0 {
            return Err("--samples must be positive".into());
        }
        Ok(())
    }
}

/// Settings that change how a run executes but not what it reports.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub cache_dir: Option<PathBuf>,
    /// 0 means one worker per core.
    pub jobs: usize,
}
