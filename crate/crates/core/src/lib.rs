//! Information measures for Temporal Dominance of Sensations (TDS) data.
//!
//! Panel selections are expanded onto a normalized mastication-time grid
//! ([`grid`]), turned into selection probabilities and normalized entropy
//! curves with the plugin or Chao–Shen estimator ([`estimators`]), and
//! summarized as complexity curves `C = H(1 − H)`, curve features and SVG
//! figures ([`report`]). [`simulate`] generates reproducible synthetic panels
//! whose ground-truth distributions serve as a Monte Carlo oracle.

// `!(x >= 0.0)` style checks are deliberate: NaN must fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod estimators;
pub mod grid;
pub mod ingest;
pub mod model;
pub mod report;
pub mod simulate;
pub mod validate;

pub use error::{Error, Result};
pub use estimators::{
    chao_shen_entropy, complexity_curve, complexity_value, entropy_curve, plugin_entropy,
    selection_probabilities, shannon_bits, ComplexityCurve, CurvePoint, DenominatorMode,
    EntropyCurve, Estimator, PointFlags,
};
pub use grid::{expand_dominance, expand_dominance_with, DominanceGrid, DEFAULT_GRID_SIZE};
pub use ingest::{
    parse_curve_csv, parse_events_csv, parse_manifest, write_curve_csv, CurveSeries,
    DatasetManifest, IngestError,
};
pub use model::{
    dominant_at, normalize_onset, AttributeSet, Measurement, MeasurementKey, SelectionEvent,
    TdsDataset,
};
pub use report::{curve_features, render_svg, tds_curves, CurveFeatures, Series, TdsCurves};
pub use simulate::{empirical_truth, generate_panel, sample_measurement, SimulatorConfig};
pub use validate::{validate_dataset, ValidationReport};
