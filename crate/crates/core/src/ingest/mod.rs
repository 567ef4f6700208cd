//! Reading and writing manifests, event tables and curve tables.
//!
//! Every read error points at the 1-based line of the offending input.

mod curve_csv;
mod events;
mod manifest;

use std::fmt;

use thiserror::Error;

pub use curve_csv::{parse_curve_csv, write_curve_csv, CurveSeries, CURVE_HEADER};
pub use events::{parse_events_csv, read_events_csv, write_events_csv, EVENTS_HEADER};
pub use manifest::{parse_manifest, DatasetManifest, ManifestOptions};

/// One problem found at a given line of an input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

impl LineError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IngestError {
    #[error("{}", join_lines(.0))]
    Invalid(Vec<LineError>),

    #[error("cannot write an empty curve")]
    EmptyCurve,
}

impl IngestError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        IngestError::Invalid(vec![LineError::new(line, message)])
    }

    /// The individual line errors, if any.
    pub fn lines(&self) -> &[LineError] {
        match self {
            IngestError::Invalid(lines) => lines,
            IngestError::EmptyCurve => &[],
        }
    }
}

fn join_lines(lines: &[LineError]) -> String {
    lines
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}
