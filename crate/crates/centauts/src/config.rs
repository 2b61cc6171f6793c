use std::path::PathBuf;

use centauts_core::group::DEFAULT_ELEMENT_CAP;
use centauts_core::theory::Check;
use centauts_core::Limits;
use serde::{Deserialize, Serialize};

use crate::error::CorpusError;

pub const CACHE_DIR_ENV: &str = "CENTAUTS_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format {other:?} (expected json or csv)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct RunConfig {
    pub max_order: usize,
    /// empty means every prime
    pub primes: Vec<u64>,
    pub checks: Vec<Check>,
    pub output_format: OutputFormat,
    pub cache_dir: Option<PathBuf>,
    pub budget: u64,
    /// extra group files scanned after the catalog
    pub group_files: Vec<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_order: 128,
            primes: Vec::new(),
            checks: Check::ALL.to_vec(),
            output_format: OutputFormat::Json,
            cache_dir: None,
            budget: Limits::default().aut_budget,
            group_files: Vec::new(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CorpusError> {
        if self.checks.is_empty() {
            return Err(CorpusError::Config("no checks enabled".into()));
        }
        if self.max_order > DEFAULT_ELEMENT_CAP {
            return Err(CorpusError::Config(format!(
                "maxOrder {} exceeds the element cap {DEFAULT_ELEMENT_CAP}",
                self.max_order
            )));
        }
        if self.budget == 0 {
            return Err(CorpusError::Config("budget must be positive".into()));
        }
        Ok(())
    }

    pub fn limits(&self) -> Limits {
        Limits {
            max_elements: self.max_order.max(1),
            aut_budget: self.budget,
            ..Limits::default()
        }
    }

    /// Sorted, deduplicated check list.
    pub fn normalized_checks(&self) -> Vec<Check> {
        let mut checks = self.checks.clone();
        checks.sort_unstable();
        checks.dedup();
        checks
    }

    /// `CENTAUTS_CACHE_DIR` wins over the configured directory.
    pub fn effective_cache_dir(&self) -> Option<PathBuf> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
            _ => self.cache_dir.clone(),
        }
    }
}
