//! On-disk report cache keyed by group content, check set, limits and
//! library version. Writes go to a temporary file that is then renamed, so
//! concurrent readers never see a partial entry.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use centauts_core::theory::{Check, TheoremReport};
use centauts_core::{Group, Limits};
use sha2::{Digest, Sha256};

use crate::error::CorpusError;

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Cache, CorpusError> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir).map_err(|e| CorpusError::io(&dir, e))?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(g: &Group, checks: &[Check], limits: &Limits) -> String {
        let mut h = Sha256::new();
        h.update(b"centauts-report\0");
        h.update(centauts_core::VERSION.as_bytes());
        h.update([0]);
        h.update((g.order() as u64).to_le_bytes());
        for row in g.table() {
            for v in row {
                h.update((v as u32).to_le_bytes());
            }
        }
        for c in checks {
            h.update(c.name().as_bytes());
            h.update(b",");
        }
        h.update((limits.max_elements as u64).to_le_bytes());
        h.update((limits.max_lattice_source as u64).to_le_bytes());
        h.update((limits.max_subgroups as u64).to_le_bytes());
        h.update(limits.aut_budget.to_le_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A missing or unreadable entry is a miss.
    pub fn load(&self, key: &str) -> Option<TheoremReport> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store(&self, key: &str, report: &TheoremReport) -> Result<(), CorpusError> {
        let text = serde_json::to_string(report)?;
        let tmp = self.dir.join(format!(
            ".{key}.{}.{}.tmp",
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        std::fs::write(&tmp, text).map_err(|e| CorpusError::io(&tmp, e))?;
        let target = self.path(key);
        std::fs::rename(&tmp, &target).map_err(|e| CorpusError::io(&target, e))
    }
}
