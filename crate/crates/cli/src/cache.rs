//! Content-addressed case cache. Entries are keyed by a SHA-256 of the
//! toolkit version, the case id and the config, and are re-validated on
//! read; anything unreadable is discarded.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::SuiteConfig;
use crate::report::Outcome;

pub const CACHE_ENV: &str = "NCSPHERE_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    id: String,
    outcome: Outcome,
}

pub fn default_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("ncsphere");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("ncsphere");
    }
    std::env::temp_dir().join("ncsphere-cache")
}

pub fn key(id: &str, config: &SuiteConfig) -> String {
    let mut h = Sha256::new();
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.update([0]);
    h.update(id.as_bytes());
    h.update([0]);
    h.update(serde_json::to_vec(config).expect("config serializes"));
    hex::encode(h.finalize())
}

fn path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

pub fn load(dir: &Path, id: &str, key: &str) -> Option<Outcome> {
    let file = path(dir, key);
    let bytes = fs::read(&file).ok()?;
    match serde_json::from_slice::<Entry>(&bytes) {
        Ok(e) if e.key == key && e.id == id => Some(e.outcome),
        Ok(_) | Err(_) => {
            log::warn!("discarding corrupt cache entry {}", file.display());
            let _ = fs::remove_file(&file);
            None
        }
    }
}

/// Writes through a temporary file so readers never see a partial entry.
pub fn store(dir: &Path, id: &str, key: &str, outcome: &Outcome) {
    let entry = Entry {
        key: key.to_string(),
        id: id.to_string(),
        outcome: outcome.clone(),
    };
    let result = fs::create_dir_all(dir).and_then(|_| {
        let tmp = dir.join(format!("{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&entry).expect("entries serialize"))?;
        fs::rename(&tmp, path(dir, key))
    });
    if let Err(e) = result {
        log::warn!("could not write cache entry for {id}: {e}");
    }
}
