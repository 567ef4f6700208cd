use crate::estimators::{CurvePoint, PointFlags};
use crate::grid::DominanceGrid;
use crate::ingest::CurveSeries;
use crate::model::AttributeSet;

/// Panel-mode dominance rates `p(a|τ)` of every attribute, plus the chance level.
#[derive(Debug, Clone, PartialEq)]
pub struct TdsCurves {
    pub sample_id: String,
    pub taus: Vec<f64>,
    /// `(attribute label, rate per τ)` in attribute order.
    pub rates: Vec<(String, Vec<f64>)>,
    /// `1 / N_a`.
    pub chance: f64,
}

pub fn tds_curves(grid: &DominanceGrid, attributes: &AttributeSet) -> TdsCurves {
    let d = f64::from(grid.panel_denominator.max(1));
    let rates = attributes
        .names()
        .iter()
        .zip(&grid.counts)
        .map(|(name, row)| {
            (
                name.clone(),
                row.iter().map(|&c| f64::from(c) / d).collect(),
            )
        })
        .collect();
    TdsCurves {
        sample_id: grid.sample_id.clone(),
        taus: grid.taus().collect(),
        rates,
        chance: 1.0 / attributes.len() as f64,
    }
}

impl TdsCurves {
    /// One curve-table series per attribute (`tds:<label>`) and `tds:chance`.
    pub fn to_series(&self) -> Vec<CurveSeries> {
        let series = |label: String, values: &mut dyn Iterator<Item = f64>| CurveSeries {
            sample_id: self.sample_id.clone(),
            estimator: label,
            denominator: "panel".into(),
            points: self
                .taus
                .iter()
                .zip(values)
                .map(|(&tau, value)| CurvePoint {
                    tau,
                    value,
                    flags: PointFlags::default(),
                })
                .collect(),
        };
        let mut out: Vec<CurveSeries> = self
            .rates
            .iter()
            .map(|(name, r)| series(format!("tds:{name}"), &mut r.iter().copied()))
            .collect();
        out.push(series(
            "tds:chance".into(),
            &mut std::iter::repeat_n(self.chance, self.taus.len()),
        ));
        out
    }
}
