use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use super::{DatasetManifest, IngestError, LineError};
use crate::model::{Measurement, MeasurementKey, SelectionEvent, TdsDataset};
use crate::validate::{validate_dataset, Location, ValidationReport};

pub const EVENTS_HEADER: &str = "panelist,rep,sample,attribute,onset_s,swallow_s";

#[derive(Default)]
struct Pending {
    swallow_s: f64,
    first_line: usize,
    events: Vec<(f64, usize, usize)>,
}

/// Reads an event table and validates the resulting dataset.
///
/// One row per selection event. A row whose `attribute` and `onset_s` are
/// both empty declares a measurement without any selection. Row order does
/// not matter: measurements come out sorted by (sample, panelist, rep) and
/// events by onset. Any validation error aborts with the line of the
/// offending row; warnings are returned alongside the dataset.
pub fn read_events_csv(
    text: &str,
    manifest: &DatasetManifest,
) -> Result<(TdsDataset, ValidationReport), IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();

    match records.next() {
        Some(Ok(header)) if header.iter().eq(EVENTS_HEADER.split(',')) => {}
        Some(Ok(header)) => {
            return Err(IngestError::at(
                1,
                format!(
                    "expected header `{EVENTS_HEADER}`, found `{}`",
                    header.iter().collect::<Vec<_>>().join(",")
                ),
            ))
        }
        Some(Err(e)) => return Err(IngestError::at(1, e.to_string())),
        None => {
            return Err(IngestError::at(
                1,
                format!("missing header `{EVENTS_HEADER}`"),
            ))
        }
    }

    let attributes = &manifest.attributes;
    let mut errors = Vec::new();
    let mut pending: BTreeMap<MeasurementKey, Pending> = BTreeMap::new();

    for record in records {
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line() as usize);
                errors.push(LineError::new(line, e.to_string()));
                continue;
            }
        };
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != 6 {
            errors.push(LineError::new(
                line,
                format!("expected 6 fields, found {}", record.len()),
            ));
            continue;
        }
        let mut err = |msg: String| errors.push(LineError::new(line, msg));
        let (panelist, rep, sample, attribute, onset, swallow) = (
            &record[0], &record[1], &record[2], &record[3], &record[4], &record[5],
        );
        if panelist.is_empty() || sample.is_empty() {
            err("panelist and sample must be non-empty".into());
            continue;
        }
        let rep: u32 = match rep.parse() {
            Ok(r) if r >= 1 => r,
            _ => {
                err(format!("rep `{rep}` is not a positive integer"));
                continue;
            }
        };
        let swallow_s = match parse_seconds(swallow) {
            Some(s) if s > 0.0 => s,
            _ => {
                err(format!("swallow_s `{swallow}` is not a positive number"));
                continue;
            }
        };
        let key = MeasurementKey {
            sample_id: sample.to_owned(),
            panelist_id: panelist.to_owned(),
            repetition_idx: rep,
        };
        let event = match (attribute.is_empty(), onset.is_empty()) {
            (true, true) => None,
            (false, false) => {
                let Some(idx) = attributes.index_of(attribute) else {
                    err(format!(
                        "unknown attribute `{attribute}`; valid labels: {}",
                        attributes.names().join(", ")
                    ));
                    continue;
                };
                let onset_s = match parse_seconds(onset) {
                    Some(o) if o >= 0.0 => o,
                    _ => {
                        err(format!("onset_s `{onset}` is not a non-negative number"));
                        continue;
                    }
                };
                if onset_s > swallow_s {
                    err(format!(
                        "onset_s {onset_s} lies after swallow_s {swallow_s} for {key}"
                    ));
                    continue;
                }
                Some((onset_s, idx, line))
            }
            _ => {
                err("attribute and onset_s must be both set or both empty".into());
                continue;
            }
        };

        let entry = pending.entry(key).or_insert_with_key(|_| Pending {
            swallow_s,
            first_line: line,
            events: Vec::new(),
        });
        if entry.swallow_s != swallow_s {
            errors.push(LineError::new(
                line,
                format!(
                    "inconsistent swallow_s {swallow_s} (line {} has {}) for {}",
                    entry.first_line,
                    entry.swallow_s,
                    describe(panelist, rep, sample)
                ),
            ));
            continue;
        }
        if let Some(e) = event {
            entry.events.push(e);
        }
    }

    let mut lines: HashMap<MeasurementKey, (usize, Vec<usize>)> = HashMap::new();
    let mut measurements = Vec::with_capacity(pending.len());
    for (key, mut p) in pending {
        p.events.sort_by(|a, b| a.0.total_cmp(&b.0));
        for pair in p.events.windows(2) {
            if pair[0].0 == pair[1].0 {
                errors.push(LineError::new(
                    pair[1].2,
                    format!(
                        "duplicate onset_s {} for {key} (also on line {})",
                        pair[1].0, pair[0].2
                    ),
                ));
            }
        }
        lines.insert(
            key.clone(),
            (p.first_line, p.events.iter().map(|e| e.2).collect()),
        );
        measurements.push(Measurement {
            panelist_id: key.panelist_id,
            repetition_idx: key.repetition_idx,
            sample_id: key.sample_id,
            swallow_s: p.swallow_s,
            events: p
                .events
                .into_iter()
                .map(|(onset_s, attribute_idx, _)| SelectionEvent {
                    attribute_idx,
                    onset_s,
                })
                .collect(),
        });
    }

    if errors.is_empty() {
        let dataset = TdsDataset::new(attributes.clone(), measurements, manifest.n_r);
        let report = validate_dataset(&dataset);
        if report.is_ok() {
            return Ok((dataset, report));
        }
        for finding in &report.errors {
            let line = match &finding.location {
                Location::Measurement(key) => lines.get(key).map_or(1, |l| l.0),
                Location::Event { key, index } => lines
                    .get(key)
                    .and_then(|l| l.1.get(*index).copied())
                    .unwrap_or(1),
                Location::Dataset | Location::Sample(_) => 1,
            };
            errors.push(LineError::new(line, finding.to_string()));
        }
    }
    errors.sort_by_key(|e| e.line);
    Err(IngestError::Invalid(errors))
}

/// Reads an event table into a dataset; see [`read_events_csv`].
pub fn parse_events_csv(text: &str, manifest: &DatasetManifest) -> Result<TdsDataset, IngestError> {
    read_events_csv(text, manifest).map(|(dataset, _)| dataset)
}

/// Writes a dataset as an event table readable by [`read_events_csv`].
pub fn write_events_csv(dataset: &TdsDataset) -> String {
    let mut out = String::with_capacity(64 * dataset.measurements.len());
    out.push_str(EVENTS_HEADER);
    out.push('\n');
    for m in &dataset.measurements {
        if m.events.is_empty() {
            let _ = writeln!(
                out,
                "{},{},{},,,{}",
                m.panelist_id, m.repetition_idx, m.sample_id, m.swallow_s
            );
        }
        for e in &m.events {
            let label = dataset.attributes.name(e.attribute_idx).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                m.panelist_id, m.repetition_idx, m.sample_id, label, e.onset_s, m.swallow_s
            );
        }
    }
    out
}

fn describe(panelist: &str, rep: u32, sample: &str) -> String {
    format!("panelist `{panelist}` rep {rep} sample `{sample}`")
}

fn parse_seconds(s: &str) -> Option<f64> {
    s.trim().parse::<f64>().ok().filter(|v| v.is_finite())
}
