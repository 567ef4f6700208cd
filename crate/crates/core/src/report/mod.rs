//! Dominance-rate curves, entropy curve features and SVG figures.

mod features;
mod smooth;
mod svg;
mod tds;

pub use features::{curve_features, CurveFeatures};
pub use smooth::{moving_average, DEFAULT_SMOOTHING_WINDOW};
pub use svg::{render_svg, Series};
pub use tds::{tds_curves, TdsCurves};
