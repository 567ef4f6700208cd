//! Deterministic synthetic TDS panels.
//!
//! Each measurement draws a mastication time and a lag from truncated
//! normals, then selects attributes at exponentially distributed gaps. The
//! attribute weights depend on which phase of normalized mastication time the
//! selection falls in. Every measurement owns an RNG stream derived from
//! `(seed, panelist, repetition, sample)`, so panels are reproducible and
//! measurements independent of generation order.

mod config;
mod sampler;
mod stream;

pub use config::{parse_simulator_config, Phase, SimulatorConfig, DEFAULT_CONFIG_TOML};
pub use sampler::{empirical_truth, generate_panel, sample_measurement, MAX_TRUNCATION_ATTEMPTS};
pub use stream::{measurement_stream, oracle_stream};
