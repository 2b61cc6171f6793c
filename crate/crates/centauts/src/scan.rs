use centauts_core::catalog::catalog;
use centauts_core::theory::{run_checks, Check, CheckOutcome, CheckStatus, TheoremReport, Verdict};
use centauts_core::{Group, Limits};
use rayon::prelude::*;

use crate::cache::Cache;
use crate::config::RunConfig;
use crate::error::CorpusError;
use crate::groupfile::parse_group_file;

/// A group to scan, or the reason it could not be loaded.
#[derive(Debug)]
pub struct ScanTarget {
    pub id: String,
    pub group: Result<Group, String>,
}

/// Catalog groups within `max_order` and the prime filter, then group files.
pub fn corpus_targets(cfg: &RunConfig) -> Vec<ScanTarget> {
    let mut targets: Vec<ScanTarget> = catalog()
        .into_iter()
        .filter(|e| e.order <= cfg.max_order)
        .filter_map(|e| match e.build() {
            Ok(g) => {
                let keep = cfg.primes.is_empty()
                    || g.p_group_prime().is_some_and(|p| cfg.primes.contains(&p));
                keep.then(|| ScanTarget {
                    id: e.name.to_string(),
                    group: Ok(g),
                })
            }
            Err(err) => Some(ScanTarget {
                id: e.name.to_string(),
                group: Err(err.to_string()),
            }),
        })
        .collect();
    for path in &cfg.group_files {
        targets.push(match parse_group_file(path, cfg.limits().max_elements) {
            Ok((name, g)) => ScanTarget {
                id: name,
                group: Ok(g),
            },
            Err(e) => ScanTarget {
                id: path.display().to_string(),
                group: Err(e.to_string()),
            },
        });
    }
    targets
}

/// Runs `checks` on one group, consulting and filling the cache.
pub fn analyze_group(
    id: &str,
    g: &Group,
    checks: &[Check],
    limits: Limits,
    cache: Option<&Cache>,
) -> TheoremReport {
    let key = cache.map(|_| Cache::key(g, checks, &limits));
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(mut hit) = c.load(k) {
            hit.group_id = id.to_string();
            return hit;
        }
    }
    let report = run_checks(id, g, checks, limits);
    if let (Some(c), Some(k)) = (cache, &key) {
        // a failed write only costs a recomputation next time
        let _ = c.store(k, &report);
    }
    report
}

fn load_failure(id: &str, reason: &str) -> TheoremReport {
    let mut lemma_checks = std::collections::BTreeMap::new();
    lemma_checks.insert(
        "load".to_string(),
        CheckOutcome {
            status: CheckStatus::Error,
            detail: reason.to_string(),
        },
    );
    TheoremReport {
        group_id: id.to_string(),
        order: 0,
        prime: None,
        class: None,
        condition_side: None,
        oracle_side: None,
        lemma_checks,
        verdict: Verdict::Error,
        witnesses: Vec::new(),
    }
}

/// Reports in target order, whatever the thread schedule.
pub fn scan_targets(
    targets: &[ScanTarget],
    cfg: &RunConfig,
    cache: Option<&Cache>,
) -> Vec<TheoremReport> {
    let checks = cfg.normalized_checks();
    let limits = cfg.limits();
    targets
        .par_iter()
        .map(|t| match &t.group {
            Ok(g) => analyze_group(&t.id, g, &checks, limits, cache),
            Err(reason) => load_failure(&t.id, reason),
        })
        .collect()
}

pub fn scan_corpus(cfg: &RunConfig) -> Result<Vec<TheoremReport>, CorpusError> {
    cfg.validate()?;
    let cache = cfg.effective_cache_dir().map(Cache::open).transpose()?;
    Ok(scan_targets(&corpus_targets(cfg), cfg, cache.as_ref()))
}
