//! Content-addressed report cache. The key hashes exactly the inputs that
//! determine the result (n, word, mu, tool version); the cache can only ever
//! accelerate, never change, a report.

use crate::report::BasisReport;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

#[derive(Serialize)]
struct CacheKey<'a> {
    n: usize,
    word: &'a [usize],
    mu: &'a [i64],
    tool_version: &'a str,
}

pub fn cache_path(dir: &Path, n: usize, word: &[usize], mu: &[i64]) -> PathBuf {
    let key = CacheKey {
        n,
        word,
        mu,
        tool_version: env!("CARGO_PKG_VERSION"),
    };
    let bytes = serde_json::to_vec(&key).expect("key serializes");
    let digest = Sha256::digest(&bytes);
    dir.join(format!("{digest:x}.json"))
}

pub fn load(path: &Path) -> Option<BasisReport> {
    let data = std::fs::read(path).ok()?;
    serde_json::from_slice(&data).ok()
}

pub fn store(path: &Path, report: &BasisReport) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, serde_json::to_vec_pretty(report).expect("report serializes"))
}
