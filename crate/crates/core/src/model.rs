//! TDS domain model: attribute sets, measurements and the normalized time axis.
//!
//! Mastication time of every measurement is rescaled to `τ ∈ [0, 100]`, with
//! `τ = 0` at intake and `τ = 100` at swallowing. A selected attribute stays
//! dominant until the panelist selects another one; before the first
//! selection (the lag period) no attribute is dominant.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{domain, Result};

/// Above this many attributes panelists no longer use the full list.
pub const RECOMMENDED_MAX_ATTRIBUTES: usize = 10;

/// The declared, ordered list of attributes a panel chooses from.
///
/// The declared length fixes the entropy normalization, including attributes
/// that are never selected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeSet {
    names: Vec<String>,
}

impl AttributeSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(domain(format!(
                "an attribute set needs at least 2 attributes, got {}",
                names.len()
            )));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(domain("attribute labels must be non-empty"));
            }
            if !seen.insert(name.as_str()) {
                return Err(domain(format!("duplicate attribute label `{name}`")));
            }
        }
        Ok(Self { names })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false; an attribute set holds at least two labels.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> Option<&str> {
        self.names.get(idx).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    /// True when the list is longer than panelists can actively use.
    pub fn exceeds_recommended(&self) -> bool {
        self.names.len() > RECOMMENDED_MAX_ATTRIBUTES
    }
}

/// A panelist's selection of `attribute_idx` as dominant at `onset_s` seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectionEvent {
    pub attribute_idx: usize,
    pub onset_s: f64,
}

/// Identifies one mastication: a panelist's repetition on a sample.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MeasurementKey {
    pub sample_id: String,
    pub panelist_id: String,
    pub repetition_idx: u32,
}

impl fmt::Display for MeasurementKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "panelist `{}` rep {} sample `{}`",
            self.panelist_id, self.repetition_idx, self.sample_id
        )
    }
}

/// One panelist × repetition × sample: swallow time and ordered selections.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    pub panelist_id: String,
    pub repetition_idx: u32,
    pub sample_id: String,
    /// Mastication time `T` in seconds, from intake to swallowing.
    pub swallow_s: f64,
    pub events: Vec<SelectionEvent>,
}

impl Measurement {
    pub fn key(&self) -> MeasurementKey {
        MeasurementKey {
            sample_id: self.sample_id.clone(),
            panelist_id: self.panelist_id.clone(),
            repetition_idx: self.repetition_idx,
        }
    }

    /// Normalized onset of every event, in order.
    pub fn normalized_onsets(&self) -> impl Iterator<Item = f64> + '_ {
        self.events
            .iter()
            .map(move |e| 100.0 * e.onset_s / self.swallow_s)
    }
}

/// Maps an onset in seconds onto normalized time `100 · onset / T`.
pub fn normalize_onset(onset_s: f64, swallow_s: f64) -> Result<f64> {
    if !(swallow_s > 0.0) || !swallow_s.is_finite() {
        return Err(domain(format!(
            "mastication time must be positive, got {swallow_s}"
        )));
    }
    if !(onset_s >= 0.0) {
        return Err(domain(format!("onset must be non-negative, got {onset_s}")));
    }
    if onset_s > swallow_s {
        return Err(domain(format!(
            "onset {onset_s} s lies after swallowing at {swallow_s} s"
        )));
    }
    Ok(100.0 * onset_s / swallow_s)
}

/// Attribute dominant at normalized time `tau`, or `None` during the lag.
///
/// Event intervals are half-open, `[onset_i, onset_{i+1})`; the last one
/// extends through `τ = 100`.
pub fn dominant_at(m: &Measurement, tau: f64) -> Option<usize> {
    let defined = m.normalized_onsets().take_while(|&t| t <= tau).count();
    defined.checked_sub(1).map(|i| m.events[i].attribute_idx)
}

/// A set of TDS measurements over a declared attribute set.
#[derive(Debug, Clone, PartialEq)]
pub struct TdsDataset {
    pub attributes: AttributeSet,
    pub measurements: Vec<Measurement>,
    /// Declared repetitions per panelist per sample.
    pub n_r: u32,
}

impl TdsDataset {
    pub fn new(attributes: AttributeSet, measurements: Vec<Measurement>, n_r: u32) -> Self {
        Self {
            attributes,
            measurements,
            n_r,
        }
    }

    /// Number of distinct panelists across the whole dataset.
    pub fn n_p(&self) -> usize {
        self.measurements
            .iter()
            .map(|m| m.panelist_id.as_str())
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Sample ids in lexicographic order.
    pub fn sample_ids(&self) -> Vec<&str> {
        self.measurements
            .iter()
            .map(|m| m.sample_id.as_str())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn measurements_for<'a>(
        &'a self,
        sample_id: &'a str,
    ) -> impl Iterator<Item = &'a Measurement> + 'a {
        self.measurements
            .iter()
            .filter(move |m| m.sample_id == sample_id)
    }

    /// Expected measurement count per sample for a complete design, `n_p · n_r`.
    pub fn design_size(&self) -> usize {
        self.n_p() * self.n_r as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_events() -> Measurement {
        // T = 20 s: onsets 5 s and 12 s normalize to τ = 25 and τ = 60.
        Measurement {
            panelist_id: "p1".into(),
            repetition_idx: 1,
            sample_id: "gel".into(),
            swallow_s: 20.0,
            events: vec![
                SelectionEvent {
                    attribute_idx: 0,
                    onset_s: 5.0,
                },
                SelectionEvent {
                    attribute_idx: 1,
                    onset_s: 12.0,
                },
            ],
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_onset(0.0, 20.0).unwrap(), 0.0);
        assert_eq!(normalize_onset(20.0, 20.0).unwrap(), 100.0);
        assert_eq!(normalize_onset(5.0, 20.0).unwrap(), 25.0);
    }

    #[test]
    fn normalize_rejects_bad_domain() {
        assert!(matches!(
            normalize_onset(21.0, 20.0),
            Err(crate::Error::Domain(_))
        ));
        assert!(normalize_onset(0.0, 0.0).is_err());
        assert!(normalize_onset(0.0, -3.0).is_err());
        assert!(normalize_onset(-1.0, 3.0).is_err());
    }

    #[test]
    fn dominance_follows_events() {
        let m = two_events();
        assert_eq!(dominant_at(&m, 10.0), None);
        assert_eq!(dominant_at(&m, 25.0), Some(0));
        assert_eq!(dominant_at(&m, 59.9), Some(0));
        assert_eq!(dominant_at(&m, 60.0), Some(1));
        assert_eq!(dominant_at(&m, 100.0), Some(1));
    }

    #[test]
    fn empty_measurement_never_dominant() {
        let mut m = two_events();
        m.events.clear();
        assert_eq!(dominant_at(&m, 0.0), None);
        assert_eq!(dominant_at(&m, 100.0), None);
    }

    #[test]
    fn attribute_set_contract() {
        assert!(AttributeSet::new(["firm"]).is_err());
        assert!(AttributeSet::new(["firm", "firm"]).is_err());
        let set = AttributeSet::new(["firm", "creamy"]).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.index_of("creamy"), Some(1));
        assert!(!set.exceeds_recommended());
        let big = AttributeSet::new((0..11).map(|i| format!("a{i}"))).unwrap();
        assert!(big.exceeds_recommended());
    }

    #[test]
    fn dataset_counts_panelists() {
        let mut a = two_events();
        let mut b = two_events();
        b.repetition_idx = 2;
        a.sample_id = "x".into();
        let ds = TdsDataset::new(AttributeSet::new(["a", "b"]).unwrap(), vec![a, b], 2);
        assert_eq!(ds.n_p(), 1);
        assert_eq!(ds.sample_ids(), vec!["gel", "x"]);
        assert_eq!(ds.design_size(), 2);
    }
}
