//! Group files, corpus scans, report emission and result caching on top of
//! [`centauts_core`].

pub mod cache;
pub mod config;
pub mod error;
pub mod groupfile;
pub mod report;
pub mod scan;

pub use cache::Cache;
pub use config::{OutputFormat, RunConfig};
pub use error::{CorpusError, ParseError};
pub use groupfile::{parse_group_file, parse_group_text, FactorSpec, Format, GroupSpecFile};
pub use report::{emit_report, parse_reports_json, CSV_COLUMNS};
pub use scan::{analyze_group, corpus_targets, scan_corpus, scan_targets, ScanTarget};
