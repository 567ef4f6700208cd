use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::AttributeSet;

/// The shipped master-curve configuration.
pub const DEFAULT_CONFIG_TOML: &str = include_str!("../../../../configs/master-curve.default");

/// A contiguous slice `[start, end)` of normalized mastication time (the last
/// phase is closed at 1) with its attribute selection weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Phase {
    pub start: f64,
    pub end: f64,
    pub weights: Vec<f64>,
}

impl Phase {
    /// Weights normalized to a probability vector.
    pub fn distribution(&self) -> Vec<f64> {
        let total: f64 = self.weights.iter().sum();
        self.weights.iter().map(|w| w / total).collect()
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.start + self.end)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulatorConfig {
    pub attributes: AttributeSet,
    /// Sample ids to generate; defaults to a single `synthetic` sample.
    pub samples: Vec<String>,
    pub n_p: u32,
    pub n_r: u32,
    pub duration_mean_s: f64,
    pub duration_sd_s: f64,
    pub lag_mean_s: f64,
    pub lag_sd_s: f64,
    /// Mean gap between successive selections.
    pub dwell_mean_s: f64,
    pub phases: Vec<Phase>,
    pub seed: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    attributes: Vec<String>,
    #[serde(default)]
    samples: Option<Vec<String>>,
    n_p: u32,
    n_r: u32,
    seed: u64,
    duration_mean_s: f64,
    duration_sd_s: f64,
    lag_mean_s: f64,
    lag_sd_s: f64,
    dwell_mean_s: f64,
    phases: Vec<Phase>,
}

pub fn parse_simulator_config(text: &str) -> Result<SimulatorConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    let config = SimulatorConfig {
        attributes: AttributeSet::new(raw.attributes).map_err(|e| Error::Config(e.to_string()))?,
        samples: raw.samples.unwrap_or_else(|| vec!["synthetic".to_owned()]),
        n_p: raw.n_p,
        n_r: raw.n_r,
        duration_mean_s: raw.duration_mean_s,
        duration_sd_s: raw.duration_sd_s,
        lag_mean_s: raw.lag_mean_s,
        lag_sd_s: raw.lag_sd_s,
        dwell_mean_s: raw.dwell_mean_s,
        phases: raw.phases,
        seed: raw.seed,
    };
    config.validate()?;
    Ok(config)
}

impl Default for SimulatorConfig {
    fn default() -> Self {
        parse_simulator_config(DEFAULT_CONFIG_TOML).expect("shipped default config is valid")
    }
}

impl SimulatorConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.n_p < 1 || self.n_r < 1 {
            return bad(format!(
                "n_p and n_r must be at least 1 (got {} and {})",
                self.n_p, self.n_r
            ));
        }
        if self.samples.is_empty() || self.samples.iter().any(String::is_empty) {
            return bad("sample ids must be non-empty".into());
        }
        if !(self.duration_mean_s > 0.0 && self.duration_mean_s.is_finite()) {
            return bad(format!(
                "duration_mean_s must be positive, got {}",
                self.duration_mean_s
            ));
        }
        if !(self.lag_mean_s >= 0.0 && self.lag_mean_s.is_finite()) {
            return bad(format!(
                "lag_mean_s must be non-negative, got {}",
                self.lag_mean_s
            ));
        }
        for (name, sd) in [
            ("duration_sd_s", self.duration_sd_s),
            ("lag_sd_s", self.lag_sd_s),
        ] {
            if !(sd >= 0.0 && sd.is_finite()) {
                return bad(format!("{name} must be non-negative, got {sd}"));
            }
        }
        if !(self.dwell_mean_s > 0.0 && self.dwell_mean_s.is_finite()) {
            return bad(format!(
                "dwell_mean_s must be positive, got {}",
                self.dwell_mean_s
            ));
        }
        let Some(first) = self.phases.first() else {
            return bad("at least one phase is required".into());
        };
        if first.start != 0.0 {
            return bad(format!(
                "first phase must start at 0, starts at {}",
                first.start
            ));
        }
        for (i, phase) in self.phases.iter().enumerate() {
            if !(phase.start < phase.end) {
                return bad(format!(
                    "phase {} is empty: [{}, {})",
                    i + 1,
                    phase.start,
                    phase.end
                ));
            }
            if let Some(next) = self.phases.get(i + 1) {
                if next.start != phase.end {
                    return bad(format!(
                        "phase {} ends at {} but phase {} starts at {}",
                        i + 1,
                        phase.end,
                        i + 2,
                        next.start
                    ));
                }
            }
            if phase.weights.len() != self.attributes.len() {
                return bad(format!(
                    "phase {} has {} weights for {} attributes",
                    i + 1,
                    phase.weights.len(),
                    self.attributes.len()
                ));
            }
            if phase.weights.iter().any(|w| !(*w >= 0.0 && w.is_finite())) {
                return bad(format!(
                    "phase {} has a negative or non-finite weight",
                    i + 1
                ));
            }
            if phase.weights.iter().all(|&w| w == 0.0) {
                return bad(format!("phase {} has only zero weights", i + 1));
            }
        }
        let last = self.phases.last().expect("non-empty");
        if last.end != 1.0 {
            return bad(format!("last phase must end at 1, ends at {}", last.end));
        }
        Ok(())
    }

    /// Index of the phase covering normalized fraction `f ∈ [0, 1]`.
    pub fn phase_index(&self, f: f64) -> usize {
        self.phases
            .iter()
            .position(|p| f < p.end)
            .unwrap_or(self.phases.len() - 1)
    }

    pub fn to_toml(&self) -> String {
        let raw = RawConfig {
            attributes: self.attributes.names().to_vec(),
            samples: Some(self.samples.clone()),
            n_p: self.n_p,
            n_r: self.n_r,
            seed: self.seed,
            duration_mean_s: self.duration_mean_s,
            duration_sd_s: self.duration_sd_s,
            lag_mean_s: self.lag_mean_s,
            lag_sd_s: self.lag_sd_s,
            dwell_mean_s: self.dwell_mean_s,
            phases: self.phases.clone(),
        };
        toml::to_string(&raw).expect("config is always representable as TOML")
    }
}
