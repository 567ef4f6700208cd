use rand::Rng;
use rand_distr::weighted::WeightedIndex;
use rand_distr::{Distribution, Exp, Normal};

use super::stream::{measurement_stream, oracle_stream};
use super::SimulatorConfig;
use crate::error::{Error, Result};
use crate::model::{dominant_at, Measurement, SelectionEvent, TdsDataset};

/// Rejection attempts for a truncated normal before falling back to its mean.
pub const MAX_TRUNCATION_ATTEMPTS: usize = 100;

/// Lag never exceeds this fraction of the mastication time.
const MAX_LAG_FRACTION: f64 = 0.9;

struct Sampler<'a> {
    config: &'a SimulatorConfig,
    duration: Normal<f64>,
    lag: Normal<f64>,
    gap: Exp<f64>,
    phase_weights: Vec<WeightedIndex<f64>>,
}

impl<'a> Sampler<'a> {
    fn new(config: &'a SimulatorConfig) -> Result<Self> {
        config.validate()?;
        let cfg = |e: &dyn std::fmt::Display| Error::Config(e.to_string());
        Ok(Self {
            config,
            duration: Normal::new(config.duration_mean_s, config.duration_sd_s)
                .map_err(|e| cfg(&e))?,
            lag: Normal::new(config.lag_mean_s, config.lag_sd_s).map_err(|e| cfg(&e))?,
            gap: Exp::new(1.0 / config.dwell_mean_s).map_err(|e| cfg(&e))?,
            phase_weights: config
                .phases
                .iter()
                .map(|p| WeightedIndex::new(&p.weights).map_err(|e| cfg(&e)))
                .collect::<Result<_>>()?,
        })
    }

    fn truncated<R: Rng>(rng: &mut R, dist: &Normal<f64>, accept: impl Fn(f64) -> bool) -> f64 {
        (0..MAX_TRUNCATION_ATTEMPTS)
            .map(|_| dist.sample(rng))
            .find(|&x| accept(x))
            .unwrap_or_else(|| dist.mean())
    }

    fn attribute_at<R: Rng>(&self, rng: &mut R, fraction: f64) -> usize {
        self.phase_weights[self.config.phase_index(fraction)].sample(rng)
    }

    fn measurement<R: Rng>(
        &self,
        rng: &mut R,
        panelist_id: &str,
        repetition_idx: u32,
        sample_id: &str,
    ) -> Measurement {
        let swallow_s = Self::truncated(rng, &self.duration, |t| t > 0.0);
        let lag = Self::truncated(rng, &self.lag, |l| l >= 0.0).min(MAX_LAG_FRACTION * swallow_s);

        let mut events: Vec<SelectionEvent> = Vec::new();
        let mut t = lag;
        while t <= swallow_s {
            let attribute_idx = self.attribute_at(rng, t / swallow_s);
            // re-selecting the dominant attribute is unobservable
            if events.last().map(|e| e.attribute_idx) != Some(attribute_idx) {
                events.push(SelectionEvent {
                    attribute_idx,
                    onset_s: t,
                });
            }
            t += self.gap.sample(rng);
        }
        Measurement {
            panelist_id: panelist_id.to_owned(),
            repetition_idx,
            sample_id: sample_id.to_owned(),
            swallow_s,
            events,
        }
    }
}

/// Simulates one measurement from its own stream; see [`super::measurement_stream`].
pub fn sample_measurement(
    config: &SimulatorConfig,
    panelist_id: &str,
    repetition_idx: u32,
    sample_id: &str,
) -> Result<Measurement> {
    let sampler = Sampler::new(config)?;
    let mut rng = measurement_stream(config.seed, panelist_id, repetition_idx, sample_id);
    Ok(sampler.measurement(&mut rng, panelist_id, repetition_idx, sample_id))
}

/// Panelist ids used by generated panels: `p01`, `p02`, …
fn panelist_id(i: u32, n_p: u32) -> String {
    let width = n_p.to_string().len().max(2);
    format!("p{:0width$}", i + 1)
}

/// `n_p × n_r` simulated measurements of one sample.
pub fn generate_panel(config: &SimulatorConfig, sample_id: &str) -> Result<TdsDataset> {
    let sampler = Sampler::new(config)?;
    let mut measurements = Vec::with_capacity((config.n_p * config.n_r) as usize);
    for p in 0..config.n_p {
        let panelist = panelist_id(p, config.n_p);
        for rep in 1..=config.n_r {
            let mut rng = measurement_stream(config.seed, &panelist, rep, sample_id);
            measurements.push(sampler.measurement(&mut rng, &panelist, rep, sample_id));
        }
    }
    Ok(TdsDataset::new(
        config.attributes.clone(),
        measurements,
        config.n_r,
    ))
}

/// Active-mode attribute distribution at normalized time `tau`, estimated
/// from `n_mc` independent oracle draws.
///
/// Only draws with a dominant attribute at `tau` count; the standard error of
/// each component is at most `0.5 / √n_defined`.
pub fn empirical_truth(config: &SimulatorConfig, tau: f64, n_mc: u64) -> Result<Vec<f64>> {
    if n_mc == 0 {
        return Err(Error::Domain("n_mc must be at least 1".into()));
    }
    let sampler = Sampler::new(config)?;
    let mut freq = vec![0u64; config.attributes.len()];
    let mut defined = 0u64;
    for i in 0..n_mc {
        let mut rng = oracle_stream(config.seed, i);
        let m = sampler.measurement(&mut rng, "oracle", 1, "oracle");
        if let Some(a) = dominant_at(&m, tau) {
            freq[a] += 1;
            defined += 1;
        }
    }
    if defined == 0 {
        return Err(Error::NoData(format!(
            "no oracle draw has a dominant attribute at tau {tau}"
        )));
    }
    Ok(freq.iter().map(|&c| c as f64 / defined as f64).collect())
}
