//! JSON group files: `{"name", "format": "cayley"|"perm"|"product", ...}`.

use std::path::Path;

use centauts_core::{catalog, Error, Group};
use serde::{Deserialize, Serialize};

use crate::error::{CorpusError, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Cayley,
    Perm,
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub name: String,
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// each generator as its image list on `0..degree`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorSpec>>,
}

/// A product factor: a catalog name or a nested spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FactorSpec {
    Name(String),
    Spec(Box<GroupSpecFile>),
}

fn missing(at: &str, field: &str) -> CorpusError {
    ParseError::new(format!("{at}{field}"), "required field is missing").into()
}

fn located(at: &str, e: Error) -> CorpusError {
    match e {
        Error::SizeLimitExceeded { .. } | Error::NotAGroup { .. } => CorpusError::Group(e),
        other => ParseError::new(at.trim_end_matches('.'), other.to_string()).into(),
    }
}

impl GroupSpecFile {
    /// The Cayley-table spec of `g`.
    pub fn cayley(name: impl Into<String>, g: &Group) -> GroupSpecFile {
        GroupSpecFile {
            name: name.into(),
            format: Format::Cayley,
            n: Some(g.order()),
            table: Some(g.table()),
            degree: None,
            generators: None,
            factors: None,
        }
    }

    pub fn to_group(&self, cap: usize) -> Result<Group, CorpusError> {
        self.build_at("", cap)
    }

    fn build_at(&self, at: &str, cap: usize) -> Result<Group, CorpusError> {
        match self.format {
            Format::Cayley => {
                let n = self.n.ok_or_else(|| missing(at, "n"))?;
                let table = self.table.as_ref().ok_or_else(|| missing(at, "table"))?;
                if n > cap {
                    return Err(Error::SizeLimitExceeded {
                        what: "group file",
                        cap,
                    }
                    .into());
                }
                if table.len() != n {
                    return Err(ParseError::new(
                        format!("{at}table"),
                        format!("expected {n} rows, found {}", table.len()),
                    )
                    .into());
                }
                for (i, row) in table.iter().enumerate() {
                    if row.len() != n {
                        return Err(ParseError::new(
                            format!("{at}table[{i}]"),
                            format!("expected {n} entries, found {}", row.len()),
                        )
                        .into());
                    }
                    if let Some(j) = row.iter().position(|&v| v >= n) {
                        return Err(ParseError::new(
                            format!("{at}table[{i}][{j}]"),
                            format!("entry {} is out of range 0..{n}", row[j]),
                        )
                        .into());
                    }
                }
                Group::from_cayley_table(table).map_err(|e| located(at, e))
            }
            Format::Perm => {
                let degree = self.degree.ok_or_else(|| missing(at, "degree"))?;
                let generators = self
                    .generators
                    .as_ref()
                    .ok_or_else(|| missing(at, "generators"))?;
                for (i, gen) in generators.iter().enumerate() {
                    let mut seen = vec![false; degree];
                    let ok = gen.len() == degree
                        && gen
                            .iter()
                            .all(|&v| v < degree && !std::mem::replace(&mut seen[v], true));
                    if !ok {
                        return Err(ParseError::new(
                            format!("{at}generators[{i}]"),
                            format!("not a permutation of 0..{degree}"),
                        )
                        .into());
                    }
                }
                Group::from_permutation_generators(degree, generators, cap)
                    .map_err(|e| located(at, e))
            }
            Format::Product => {
                let factors = self
                    .factors
                    .as_ref()
                    .ok_or_else(|| missing(at, "factors"))?;
                if factors.is_empty() {
                    return Err(ParseError::new(
                        format!("{at}factors"),
                        "product needs at least one factor",
                    )
                    .into());
                }
                let mut acc: Option<Group> = None;
                for (i, f) in factors.iter().enumerate() {
                    let here = format!("{at}factors[{i}]");
                    let g = match f {
                        FactorSpec::Name(name) => catalog::build(name).map_err(|_| {
                            ParseError::new(&here, format!("unknown catalog group {name:?}"))
                        })?,
                        FactorSpec::Spec(spec) => spec.build_at(&format!("{here}."), cap)?,
                    };
                    acc = Some(match acc {
                        None => g,
                        Some(a) => a.direct_product_capped(&g, cap)?,
                    });
                }
                Ok(acc.expect("factors is nonempty"))
            }
        }
    }
}

/// Parses a group document; JSON syntax errors are located by line and column.
pub fn parse_group_text(text: &str, cap: usize) -> Result<(String, Group), CorpusError> {
    let spec: GroupSpecFile = serde_json::from_str(text).map_err(|e| {
        ParseError::new(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let g = spec.to_group(cap)?;
    Ok((spec.name, g))
}

pub fn parse_group_file(path: &Path, cap: usize) -> Result<(String, Group), CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|e| CorpusError::io(path, e))?;
    parse_group_text(&text, cap)
}
