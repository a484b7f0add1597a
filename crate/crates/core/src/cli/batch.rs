use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::output::OutputDocument;
use super::parse::parse_spec;
use crate::classifier::classify;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordError {
    pub kind: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

impl From<&Error> for RecordError {
    fn from(e: &Error) -> Self {
        let kind = match e {
            Error::NonPositiveSize { .. } => "non-positive-size",
            Error::TooLarge { .. } => "too-large",
            Error::EmptySpec => "empty-spec",
            Error::Parse { .. } => "parse",
            Error::InvalidWitness(_) => "invalid-witness",
            Error::MalformedPlan(_) => "malformed-plan",
            Error::ChiralInput => "chiral-input",
        };
        let position = match e {
            Error::Parse { position, .. } => Some(*position),
            _ => None,
        };
        RecordError {
            kind: kind.to_string(),
            message: e.to_string(),
            position,
        }
    }
}

/// Result for one non-skipped input line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRecord {
    /// 1-based line number in the input.
    pub line: usize,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub document: Option<OutputDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<RecordError>,
}

fn is_skipped(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

/// Classifies every spec line of `text` in parallel. Records come back in
/// input order; blank lines and `#` comments produce none.
pub fn classify_lines(text: &str) -> Vec<BatchRecord> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !is_skipped(l))
        .map(|(i, l)| (i + 1, l))
        .collect();
    lines
        .par_iter()
        .map(|&(line, src)| {
            let source = src.trim().to_string();
            match parse_spec(src) {
                Ok(spec) => BatchRecord {
                    line,
                    source,
                    document: Some(OutputDocument::new(classify(&spec))),
                    error: None,
                },
                Err(e) => BatchRecord {
                    line,
                    source,
                    document: None,
                    error: Some(RecordError::from(&e)),
                },
            }
        })
        .collect()
}
