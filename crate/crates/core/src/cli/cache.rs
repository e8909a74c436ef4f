//! Report cache: one JSON file per `(matrix, box, margin, seed)` key.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::report::{AnalysisReport, SCHEMA};
use crate::analysis::DegreeBox;
use crate::error::Result;

pub const CACHE_DIR_VAR: &str = "RANKJUMP_CACHE_DIR";

pub fn cache_key(rows: &[Vec<i64>], region: &DegreeBox, seed: Option<u64>) -> String {
    let mut h = Sha256::new();
    h.update(format!("schema={SCHEMA};rows={rows:?};box={region};margin={};seed={seed:?}", region.margin()));
    hex::encode(h.finalize())
}

/// `--cache` if given, else the directory named by the environment.
pub fn resolve_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CACHE_DIR_VAR).map(PathBuf::from))
}

fn entry(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

pub fn load(dir: &Path, key: &str) -> Option<AnalysisReport> {
    let text = std::fs::read_to_string(entry(dir, key)).ok()?;
    match serde_json::from_str::<AnalysisReport>(&text) {
        Ok(r) if r.schema == SCHEMA => Some(r),
        Ok(_) => None,
        Err(e) => {
            log::warn!("ignoring unreadable cache entry {key}: {e}");
            None
        }
    }
}

pub fn store(dir: &Path, key: &str, report: &AnalysisReport) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!("{key}.json.tmp"));
    std::fs::write(&tmp, report.canonical_json()?)?;
    std::fs::rename(tmp, entry(dir, key))?;
    Ok(())
}
