use super::{CurvePoint, DenominatorMode, EntropyCurve, Estimator};
use crate::error::{domain, Result};

/// Upper bound of `H(1 − H)`, reached at `H = 1/2`.
pub const MAX_COMPLEXITY: f64 = 0.25;

/// Complexity `C = H(1 − H)` of a normalized entropy.
pub fn complexity_value(h: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&h) {
        return Err(domain(format!("entropy {h} outside [0, 1]")));
    }
    Ok(h * (1.0 - h))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityCurve {
    pub sample_id: String,
    /// Estimator of the source entropy curve.
    pub estimator: Estimator,
    pub mode: DenominatorMode,
    pub points: Vec<CurvePoint>,
}

/// Pointwise complexity; flags (including `no-data`, where `C = 0`) carry over.
pub fn complexity_curve(entropy: &EntropyCurve) -> ComplexityCurve {
    let points = entropy
        .points
        .iter()
        .map(|p| CurvePoint {
            tau: p.tau,
            value: if p.flags.no_data {
                0.0
            } else {
                // entropy curves are valid by construction
                complexity_value(p.value.clamp(0.0, 1.0)).unwrap_or(0.0)
            },
            flags: p.flags,
        })
        .collect();
    ComplexityCurve {
        sample_id: entropy.sample_id.clone(),
        estimator: entropy.estimator,
        mode: entropy.mode,
        points,
    }
}
