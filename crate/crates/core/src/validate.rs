//! Dataset validation: collects every finding instead of stopping at the first.

use std::collections::HashSet;
use std::fmt;

use crate::model::{MeasurementKey, TdsDataset, RECOMMENDED_MAX_ATTRIBUTES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Dataset,
    Sample(String),
    Measurement(MeasurementKey),
    Event { key: MeasurementKey, index: usize },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Dataset => f.write_str("dataset"),
            Location::Sample(s) => write!(f, "sample `{s}`"),
            Location::Measurement(key) => write!(f, "{key}"),
            Location::Event { key, index } => write!(f, "{key} event #{}", index + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub location: Location,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<Finding>,
    pub warnings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }

    fn error(&mut self, location: Location, message: impl Into<String>) {
        self.errors.push(Finding {
            location,
            message: message.into(),
        });
    }

    fn warn(&mut self, location: Location, message: impl Into<String>) {
        self.warnings.push(Finding {
            location,
            message: message.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.errors {
            writeln!(f, "error: {e}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        write!(
            f,
            "{} error(s), {} warning(s)",
            self.errors.len(),
            self.warnings.len()
        )
    }
}

pub fn validate_dataset(dataset: &TdsDataset) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n_attr = dataset.attributes.len();

    if dataset.attributes.exceeds_recommended() {
        report.warn(
            Location::Dataset,
            format!(
                "{n_attr} attributes declared; panelists rarely use more than {RECOMMENDED_MAX_ATTRIBUTES}"
            ),
        );
    }
    if dataset.n_r < 1 {
        report.error(
            Location::Dataset,
            "declared repetitions n_r must be at least 1",
        );
    }

    let mut seen = HashSet::new();
    for m in &dataset.measurements {
        let key = m.key();
        if !seen.insert(key.clone()) {
            report.error(Location::Measurement(key.clone()), "duplicate measurement");
        }
        if m.repetition_idx < 1 {
            report.error(
                Location::Measurement(key.clone()),
                "repetition index must be at least 1",
            );
        }
        if !(m.swallow_s > 0.0 && m.swallow_s.is_finite()) {
            report.error(
                Location::Measurement(key.clone()),
                format!("swallow time must be positive, got {}", m.swallow_s),
            );
        }
        if m.events.is_empty() {
            report.warn(
                Location::Measurement(key.clone()),
                "no attribute was ever selected",
            );
        }
        let mut previous: Option<f64> = None;
        for (index, e) in m.events.iter().enumerate() {
            let at = || Location::Event {
                key: key.clone(),
                index,
            };
            if e.attribute_idx >= n_attr {
                report.error(
                    at(),
                    format!(
                        "attribute index {} out of range (N_a = {n_attr})",
                        e.attribute_idx
                    ),
                );
            }
            if !(e.onset_s >= 0.0) {
                report.error(at(), format!("onset {} s is negative", e.onset_s));
            } else if e.onset_s > m.swallow_s {
                report.error(
                    at(),
                    format!(
                        "onset {} s lies after swallowing at {} s",
                        e.onset_s, m.swallow_s
                    ),
                );
            }
            if let Some(prev) = previous {
                if !(e.onset_s > prev) {
                    report.error(
                        at(),
                        format!(
                            "onset {} s does not follow the previous onset {prev} s",
                            e.onset_s
                        ),
                    );
                }
            }
            previous = Some(e.onset_s);
        }
    }

    let expected = dataset.design_size();
    for sample in dataset.sample_ids() {
        let got = dataset.measurements_for(sample).count();
        if got != expected {
            report.warn(
                Location::Sample(sample.to_owned()),
                format!(
                    "incomplete design: {got} measurements instead of n_p·n_r = {expected}; \
                     using {got} as the panel denominator"
                ),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{AttributeSet, Measurement, SelectionEvent};

    fn m(panelist: &str, rep: u32, events: &[(usize, f64)]) -> Measurement {
        Measurement {
            panelist_id: panelist.into(),
            repetition_idx: rep,
            sample_id: "gel".into(),
            swallow_s: 20.0,
            events: events
                .iter()
                .map(|&(attribute_idx, onset_s)| SelectionEvent {
                    attribute_idx,
                    onset_s,
                })
                .collect(),
        }
    }

    fn attrs(n: usize) -> AttributeSet {
        AttributeSet::new((0..n).map(|i| format!("a{i}"))).unwrap()
    }

    #[test]
    fn well_formed_has_no_errors() {
        let ds = TdsDataset::new(
            attrs(3),
            vec![m("p1", 1, &[(0, 1.0), (2, 5.0)]), m("p2", 1, &[(1, 0.0)])],
            1,
        );
        let r = validate_dataset(&ds);
        assert!(r.is_ok(), "{r}");
        assert!(r.warnings.is_empty(), "{r}");
    }

    #[test]
    fn onset_past_swallow_cites_measurement() {
        let ds = TdsDataset::new(attrs(3), vec![m("p1", 1, &[(0, 21.0)])], 1);
        let r = validate_dataset(&ds);
        assert_eq!(r.errors.len(), 1);
        assert!(r.errors[0]
            .to_string()
            .contains("panelist `p1` rep 1 sample `gel`"));
    }

    #[test]
    fn attribute_count_warning_threshold() {
        let nine = TdsDataset::new(attrs(9), vec![m("p1", 1, &[(0, 1.0)])], 1);
        assert!(validate_dataset(&nine).warnings.is_empty());
        let eleven = TdsDataset::new(attrs(11), vec![m("p1", 1, &[(0, 1.0)])], 1);
        let r = validate_dataset(&eleven);
        assert!(r.is_ok());
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.warnings[0].location, Location::Dataset);
    }

    #[test]
    fn structural_errors() {
        let ds = TdsDataset::new(
            attrs(2),
            vec![
                m("p1", 1, &[(0, 5.0), (1, 5.0)]),
                m("p1", 1, &[(7, 1.0)]),
                m("p2", 0, &[(0, 1.0)]),
            ],
            1,
        );
        let r = validate_dataset(&ds);
        let text = r.to_string();
        assert!(text.contains("does not follow"), "{text}");
        assert!(text.contains("duplicate measurement"), "{text}");
        assert!(text.contains("out of range"), "{text}");
        assert!(text.contains("repetition index"), "{text}");
    }

    #[test]
    fn empty_and_incomplete_are_warnings() {
        let ds = TdsDataset::new(attrs(2), vec![m("p1", 1, &[]), m("p2", 1, &[(0, 1.0)])], 2);
        let r = validate_dataset(&ds);
        assert!(r.is_ok());
        assert_eq!(r.warnings.len(), 2, "{r}");
    }
}
