use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{IngestError, LineError};
use crate::estimators::{DenominatorMode, Estimator};
use crate::grid::DEFAULT_GRID_SIZE;
use crate::model::AttributeSet;

/// Declared attribute universe, design and analysis defaults of a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetManifest {
    pub attributes: AttributeSet,
    pub n_r: u32,
    /// Sample label → free-text description.
    pub samples: BTreeMap<String, String>,
    pub options: ManifestOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ManifestOptions {
    pub grid_size: usize,
    pub estimator: Estimator,
    pub denominator: DenominatorMode,
}

impl Default for ManifestOptions {
    fn default() -> Self {
        Self {
            grid_size: DEFAULT_GRID_SIZE,
            estimator: Estimator::ChaoShen,
            denominator: DenominatorMode::Active,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    attributes: Vec<String>,
    n_r: i64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    samples: BTreeMap<String, String>,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grid_size: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    estimator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    denominator: Option<String>,
}

/// Parses a TOML manifest.
///
/// ```toml
/// attributes = ["firm", "creamy"]
/// n_r = 3
///
/// [samples]
/// gel = "emulsion filled gel"
///
/// [options]
/// grid_size = 100
/// estimator = "chao-shen"   # or "plugin"
/// denominator = "active"    # or "panel"
/// ```
pub fn parse_manifest(text: &str) -> Result<DatasetManifest, IngestError> {
    let raw: RawManifest = toml::from_str(text).map_err(|e| {
        let line = e
            .span()
            .map(|span| line_of_offset(text, span.start))
            .unwrap_or(1);
        IngestError::at(line, e.message().to_owned())
    })?;

    let mut errors = Vec::new();
    let attributes = match AttributeSet::new(raw.attributes) {
        Ok(set) => Some(set),
        Err(e) => {
            errors.push(LineError::new(key_line(text, "attributes"), e.to_string()));
            None
        }
    };
    if raw.n_r < 1 || raw.n_r > i64::from(u32::MAX) {
        errors.push(LineError::new(
            key_line(text, "n_r"),
            format!("n_r must be a positive integer, got {}", raw.n_r),
        ));
    }
    let mut options = ManifestOptions::default();
    if let Some(g) = raw.options.grid_size {
        if g < 1 {
            errors.push(LineError::new(
                key_line(text, "grid_size"),
                format!("grid_size must be at least 1, got {g}"),
            ));
        } else {
            options.grid_size = g as usize;
        }
    }
    if let Some(est) = &raw.options.estimator {
        match est.parse() {
            Ok(e) => options.estimator = e,
            Err(msg) => errors.push(LineError::new(key_line(text, "estimator"), msg)),
        }
    }
    if let Some(den) = &raw.options.denominator {
        match den.parse() {
            Ok(d) => options.denominator = d,
            Err(msg) => errors.push(LineError::new(key_line(text, "denominator"), msg)),
        }
    }
    match attributes {
        Some(attributes) if errors.is_empty() => Ok(DatasetManifest {
            attributes,
            n_r: raw.n_r as u32,
            samples: raw.samples,
            options,
        }),
        _ => Err(IngestError::Invalid(errors)),
    }
}

impl DatasetManifest {
    pub fn new(attributes: AttributeSet, n_r: u32) -> Self {
        Self {
            attributes,
            n_r,
            samples: BTreeMap::new(),
            options: ManifestOptions::default(),
        }
    }

    /// Serializes back to the TOML form accepted by [`parse_manifest`].
    pub fn to_toml(&self) -> String {
        let raw = RawManifest {
            attributes: self.attributes.names().to_vec(),
            n_r: i64::from(self.n_r),
            samples: self.samples.clone(),
            options: RawOptions {
                grid_size: Some(self.options.grid_size as i64),
                estimator: Some(self.options.estimator.to_string()),
                denominator: Some(self.options.denominator.to_string()),
            },
        };
        toml::to_string(&raw).expect("manifest is always representable as TOML")
    }
}

fn line_of_offset(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

// First line assigning `key`; falls back to line 1.
fn key_line(text: &str, key: &str) -> usize {
    text.lines()
        .position(|l| {
            l.trim_start()
                .strip_prefix(key)
                .is_some_and(|rest| rest.trim_start().starts_with('='))
        })
        .map_or(1, |i| i + 1)
}
