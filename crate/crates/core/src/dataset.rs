//! Dataset files of named TRIFNs.
//!
//! Two encodings are accepted. The line format has one record per line,
//!
//! ```text
//! # Set I
//! a; 0.5, 0.7, 0.9; 0.7; 0.2
//! b; 0.12, 0.2, 0.23, 0.28; 0.8; 0.1
//! ```
//!
//! i.e. `id; a1,a2,a3[,a4]; w; u`, with `#` starting a comment. Three
//! abscissae denote a triangular number. The JSON format is an array of
//! `{"id": .., "a": [..], "w": .., "u": ..}` objects.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::trifn::{Trifn, TrifnError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetRecord {
    pub id: String,
    #[serde(rename = "a")]
    pub abscissae: Vec<f64>,
    pub w: f64,
    pub u: f64,
}

impl DatasetRecord {
    pub fn from_trifn(id: impl Into<String>, n: &Trifn) -> Self {
        let abscissae = if n.is_triangular() {
            vec![n.a1(), n.a2(), n.a4()]
        } else {
            n.abscissae().to_vec()
        };
        DatasetRecord {
            id: id.into(),
            abscissae,
            w: n.w(),
            u: n.u(),
        }
    }

    pub fn to_trifn(&self) -> Result<Trifn, TrifnError> {
        Trifn::from_abscissae(&self.abscissae, self.w, self.u)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DatasetError {
    #[error("line {line}: expected 4 ';'-separated fields (id; abscissae; w; u), found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: empty id")]
    EmptyId { line: usize },
    #[error("line {line}: cannot parse {what} from {text:?}")]
    Number {
        line: usize,
        what: &'static str,
        text: String,
    },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: TrifnError,
    },
    #[error("line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },
    #[error("invalid JSON dataset: {0}")]
    Json(String),
    #[error("dataset contains no records")]
    Empty,
}

/// A parsed record together with its validated number and source line.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub record: DatasetRecord,
    pub trifn: Trifn,
    pub line: usize,
}

/// Parses either encoding; input whose first non-blank character is `[` is
/// treated as JSON.
pub fn parse(content: &str) -> Result<Vec<Entry>, DatasetError> {
    let records = if content.trim_start().starts_with('[') {
        parse_json_records(content)?
    } else {
        parse_text_records(content)?
    };
    validate(records)
}

fn validate(records: Vec<(usize, DatasetRecord)>) -> Result<Vec<Entry>, DatasetError> {
    if records.is_empty() {
        return Err(DatasetError::Empty);
    }
    let mut entries: Vec<Entry> = Vec::with_capacity(records.len());
    for (line, record) in records {
        if record.id.trim().is_empty() {
            return Err(DatasetError::EmptyId { line });
        }
        if entries.iter().any(|e| e.record.id == record.id) {
            return Err(DatasetError::DuplicateId {
                line,
                id: record.id,
            });
        }
        let trifn = record
            .to_trifn()
            .map_err(|source| DatasetError::Invalid { line, source })?;
        entries.push(Entry {
            record,
            trifn,
            line,
        });
    }
    Ok(entries)
}

/// Parses the line format without validating the numbers.
pub fn parse_text_records(content: &str) -> Result<Vec<(usize, DatasetRecord)>, DatasetError> {
    let mut records = Vec::new();
    for (index, raw) in content.lines().enumerate() {
        let line = index + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split(';').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(DatasetError::FieldCount {
                line,
                found: fields.len(),
            });
        }
        let number = |what: &'static str, text: &str| {
            text.parse::<f64>().map_err(|_| DatasetError::Number {
                line,
                what,
                text: text.to_string(),
            })
        };
        let abscissae = fields[1]
            .split(',')
            .map(|t| number("abscissa", t.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        records.push((
            line,
            DatasetRecord {
                id: fields[0].to_string(),
                abscissae,
                w: number("w", fields[2])?,
                u: number("u", fields[3])?,
            },
        ));
    }
    Ok(records)
}

fn parse_json_records(content: &str) -> Result<Vec<(usize, DatasetRecord)>, DatasetError> {
    let records: Vec<DatasetRecord> =
        serde_json::from_str(content).map_err(|e| DatasetError::Json(e.to_string()))?;
    // JSON records are numbered by position, starting at 1.
    Ok(records.into_iter().enumerate().map(|(i, r)| (i + 1, r)).collect())
}

/// Writes records in the line format. Numbers use the shortest
/// representation that parses back to the same `f64`.
pub fn to_text(records: &[DatasetRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let abscissae: Vec<String> = r.abscissae.iter().map(f64::to_string).collect();
        out.push_str(&format!("{}; {}; {}; {}\n", r.id, abscissae.join(", "), r.w, r.u));
    }
    out
}

pub fn to_json(records: &[DatasetRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}
