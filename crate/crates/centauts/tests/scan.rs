use centauts::{
    emit_report, parse_reports_json, scan_corpus, scan_targets, Cache, CorpusError, OutputFormat,
    RunConfig, ScanTarget, CSV_COLUMNS,
};
use centauts_core::catalog::{build, catalog};
use centauts_core::theory::{run_checks, Check, Verdict};
use centauts_core::Limits;

fn cfg(max_order: usize, checks: &[Check]) -> RunConfig {
    RunConfig {
        max_order,
        checks: checks.to_vec(),
        ..RunConfig::default()
    }
}

#[test]
fn condition_scan_to_sixteen() {
    let reports = scan_corpus(&cfg(16, &[Check::Theorem])).unwrap();
    let expected: Vec<&str> = catalog()
        .iter()
        .filter(|e| e.order <= 16)
        .map(|e| e.name)
        .collect();
    let ids: Vec<&str> = reports.iter().map(|r| r.group_id.as_str()).collect();
    assert_eq!(ids, expected);
    assert!(reports.iter().all(|r| r.verdict != Verdict::Counterexample));
    assert!(reports.iter().any(|r| r.oracle_side.is_some()));
}

#[test]
fn config_is_validated() {
    assert!(matches!(
        scan_corpus(&cfg(16, &[])),
        Err(CorpusError::Config(_))
    ));
    assert!(matches!(
        scan_corpus(&cfg(513, &[Check::Theorem])),
        Err(CorpusError::Config(_))
    ));
}

#[test]
fn prime_filter_keeps_only_that_prime() {
    let c = RunConfig {
        primes: vec![3],
        ..cfg(81, &[Check::Cor1])
    };
    let reports = scan_corpus(&c).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.prime == Some(3)));
}

#[test]
fn empty_csv_is_header_only() {
    let csv = emit_report(&[], OutputFormat::Csv).unwrap();
    assert_eq!(csv, format!("{}\n", CSV_COLUMNS.join(",")));
}

#[test]
fn csv_has_one_row_per_group_and_check() {
    let checks = [Check::Theorem, Check::Cor1, Check::Attar];
    let reports = scan_corpus(&cfg(32, &checks)).unwrap();
    let csv = emit_report(&reports, OutputFormat::Csv).unwrap();
    assert_eq!(csv.lines().count(), 1 + reports.len() * checks.len());
}

#[test]
fn json_round_trips() {
    let report = run_checks(
        "D8",
        &build("D8").unwrap(),
        &[Check::Theorem],
        Limits::default(),
    );
    let json = emit_report(std::slice::from_ref(&report), OutputFormat::Json).unwrap();
    assert_eq!(parse_reports_json(&json).unwrap(), vec![report]);
    assert!(json.contains("\"autcentEqualsAutZZ\": true"));
    assert!(json.contains("\"verdict\": \"agree\""));
}

#[test]
fn cached_results_equal_fresh_ones() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let c = cfg(32, &Check::ALL);
    let targets: Vec<ScanTarget> = catalog()
        .into_iter()
        .filter(|e| e.order <= 32)
        .map(|e| ScanTarget {
            id: e.name.to_string(),
            group: e.build().map_err(|x| x.to_string()),
        })
        .collect();
    let fresh = scan_targets(&targets, &c, None);
    let filled = scan_targets(&targets, &c, Some(&cache));
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(entries > 0);
    let cached = scan_targets(&targets, &c, Some(&cache));
    assert_eq!(fresh, filled);
    assert_eq!(fresh, cached);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), entries);
}

#[test]
fn cache_keys_depend_on_checks_and_limits() {
    let g = build("D8").unwrap();
    let l = Limits::default();
    let a = Cache::key(&g, &[Check::Theorem], &l);
    assert_eq!(a, Cache::key(&g, &[Check::Theorem], &l));
    assert_ne!(a, Cache::key(&g, &[Check::Cor1], &l));
    assert_ne!(
        a,
        Cache::key(&g, &[Check::Theorem], &Limits { aut_budget: 5, ..l })
    );
    assert_ne!(a, Cache::key(&build("Q8").unwrap(), &[Check::Theorem], &l));
}

#[test]
fn unreadable_group_files_become_error_reports() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(
        &good,
        r#"{"name":"mine","format":"product","factors":["D8","C2"]}"#,
    )
    .unwrap();
    let c = RunConfig {
        group_files: vec![bad, good],
        ..cfg(16, &[Check::Theorem])
    };
    let reports = scan_corpus(&c).unwrap();
    let tail = &reports[reports.len() - 2..];
    assert_eq!(tail[0].verdict, Verdict::Error);
    assert!(tail[0].lemma_checks.contains_key("load"));
    assert_eq!(tail[1].group_id, "mine");
    assert_eq!(tail[1].verdict, Verdict::Agree);
}
