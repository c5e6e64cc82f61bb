//! Batch verification suites over `ncsphere-core` with deterministic JSON
//! reports and an on-disk case cache.

pub mod cache;
pub mod config;
pub mod report;
pub mod suites;

use std::time::Instant;

use rayon::prelude::*;

use config::{RunOptions, SuiteConfig, SuiteName};
use report::{CaseRecord, Report};
use suites::Case;

fn run_case(case: &Case, config: &SuiteConfig, options: &RunOptions) -> CaseRecord {
    let started = Instant::now();
    let cache = options.cache_dir.as_deref().filter(|_| case.cached);
    let key = cache.map(|_| cache::key(&case.id, config));
    let hit = cache
        .zip(key.as_deref())
        .and_then(|(dir, k)| cache::load(dir, &case.id, k));
    let outcome = match hit {
        Some(o) => {
            log::info!("cache hit for {}", case.id);
            o
        }
        None => {
            let o = (case.run)();
            if let (Some(dir), Some(k)) = (cache, key.as_deref()) {
                cache::store(dir, &case.id, k, &o);
            }
            o
        }
    };
    CaseRecord {
        id: case.id.clone(),
        claim: case.claim.clone(),
        verdict: outcome.verdict,
        witness: outcome.witness,
        ms: started.elapsed().as_millis() as u64,
    }
}

/// Runs every case of `suite` on a pool of `options.jobs` workers. `all`
/// never runs exploratory levels.
pub fn run_suite(
    suite: SuiteName,
    config: &SuiteConfig,
    options: &RunOptions,
) -> anyhow::Result<Report> {
    config.validate().map_err(anyhow::Error::msg)?;
    let config = if suite == SuiteName::All {
        SuiteConfig {
            explore: false,
            ..config.clone()
        }
    } else {
        config.clone()
    };
    let cases = suites::cases(suite, &config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()?;
    let records = pool.install(|| {
        cases
            .par_iter()
            .map(|c| run_case(c, &config, options))
            .collect()
    });
    Ok(Report::new(suite.name(), config, records))
}
