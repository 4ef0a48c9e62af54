//! The output document and its JSON, CSV and pretty renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use triad_core::{FamilyTag, Rational};

use crate::error::CliError;
use crate::params::parse_rational;

/// Every number is an exact decimal string (`"-7"`) or fraction (`"3/4"`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub rows: Vec<Vec<String>>,
    pub report: Option<Value>,
}

impl OutputDocument {
    pub fn new(tag: &FamilyTag, rows: &[Vec<Rational>], report: Option<Value>) -> Self {
        OutputDocument {
            family: tag.name.clone(),
            params: tag.params.clone(),
            rows: rows
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
            report,
        }
    }

    pub fn rational_rows(&self) -> Result<Vec<Vec<Rational>>, CliError> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| parse_rational(x)).collect())
            .collect()
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_writer(Vec::new());
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }

    /// Centered triangle for reading; not meant to be parsed back.
    pub fn to_pretty(&self) -> String {
        let cell = self.rows.iter().flatten().map(|x| x.len()).max().unwrap_or(1);
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| format!("{x:^cell$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let width = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for line in lines {
            let pad = (width - line.chars().count()) / 2;
            out.push_str(&" ".repeat(pad));
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Rows of a CSV document as exact rationals.
pub fn parse_csv(s: &str) -> Result<Vec<Vec<Rational>>, CliError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(s.as_bytes());
    r.records()
        .map(|rec| rec?.iter().map(parse_rational).collect())
        .collect()
}
