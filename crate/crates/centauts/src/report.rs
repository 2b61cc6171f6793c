use centauts_core::theory::TheoremReport;

use crate::config::OutputFormat;
use crate::error::CorpusError;

pub const CSV_COLUMNS: [&str; 14] = [
    "groupId",
    "order",
    "prime",
    "class",
    "check",
    "status",
    "rEqS",
    "residualIso",
    "expEq",
    "conditionAll",
    "autcentOrder",
    "autZZOrder",
    "innOrder",
    "verdict",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// JSON is the full nested report list; CSV has one row per (group, check).
pub fn emit_report(reports: &[TheoremReport], format: OutputFormat) -> Result<String, CorpusError> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(reports)?;
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS)?;
            for r in reports {
                let c = r.condition_side;
                let o = r.oracle_side;
                for (check, outcome) in &r.lemma_checks {
                    w.write_record([
                        r.group_id.clone(),
                        r.order.to_string(),
                        opt(r.prime),
                        opt(r.class),
                        check.clone(),
                        outcome.status.as_str().to_string(),
                        opt(c.map(|c| c.r_eq_s)),
                        opt(c.map(|c| c.residual_iso)),
                        opt(c.map(|c| c.exp_eq)),
                        opt(c.map(|c| c.all)),
                        opt(o.map(|o| o.autcent_order)),
                        opt(o.map(|o| o.aut_zz_order)),
                        opt(o.map(|o| o.inn_order)),
                        r.verdict.as_str().to_string(),
                    ])?;
                }
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CorpusError::Csv(e.into_error().into()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

pub fn parse_reports_json(text: &str) -> Result<Vec<TheoremReport>, CorpusError> {
    Ok(serde_json::from_str(text)?)
}
