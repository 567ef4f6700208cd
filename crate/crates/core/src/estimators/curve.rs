use super::{
    chao_shen_entropy_with_denominator, plugin_entropy, selection_probabilities, CurvePoint,
    DenominatorMode, Estimator, PointFlags,
};
use crate::error::Result;
use crate::grid::DominanceGrid;

/// Normalized entropy at every point of a dominance grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyCurve {
    pub sample_id: String,
    pub estimator: Estimator,
    pub mode: DenominatorMode,
    pub points: Vec<CurvePoint>,
}

impl EntropyCurve {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.value)
    }

    /// Value at the grid point closest to `tau`.
    pub fn value_at(&self, tau: f64) -> Option<f64> {
        self.points
            .iter()
            .min_by(|a, b| (a.tau - tau).abs().total_cmp(&(b.tau - tau).abs()))
            .map(|p| p.value)
    }
}

/// Applies `estimator` at every grid point.
///
/// Points with `N(τ) = 0` get `H = 0` and the `no-data` flag; no estimator
/// failure aborts the curve.
pub fn entropy_curve(
    grid: &DominanceGrid,
    estimator: Estimator,
    mode: DenominatorMode,
) -> Result<EntropyCurve> {
    let n_attr = grid.n_attributes();
    let points = (0..grid.len())
        .map(|k| {
            let tau = grid.tau(k);
            if grid.totals[k] == 0 {
                return Ok(CurvePoint {
                    tau,
                    value: 0.0,
                    flags: PointFlags::NO_DATA,
                });
            }
            let (value, flags) = match estimator {
                Estimator::Plugin => {
                    let p = selection_probabilities(grid, k, mode)?;
                    (plugin_entropy(&p, n_attr)?, PointFlags::default())
                }
                Estimator::ChaoShen => {
                    let counts = grid.counts_at(k);
                    let denominator = match mode {
                        DenominatorMode::Active => grid.totals[k],
                        DenominatorMode::Panel => grid.panel_denominator,
                    };
                    let est = chao_shen_entropy_with_denominator(&counts, n_attr, denominator)?;
                    (est.value, est.flags)
                }
            };
            Ok(CurvePoint { tau, value, flags })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyCurve {
        sample_id: grid.sample_id.clone(),
        estimator,
        mode,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_from(rows: Vec<Vec<u32>>, panel: u32) -> DominanceGrid {
        let len = rows[0].len();
        let totals = (0..len).map(|k| rows.iter().map(|r| r[k]).sum()).collect();
        DominanceGrid {
            sample_id: "s".into(),
            grid_size: len - 1,
            counts: rows,
            totals,
            panel_denominator: panel,
        }
    }

    #[test]
    fn single_attribute_is_certain() {
        let mut rows = vec![vec![0; 101]; 8];
        rows[2] = vec![1; 101];
        let g = grid_from(rows, 1);
        for est in [Estimator::Plugin, Estimator::ChaoShen] {
            let c = entropy_curve(&g, est, DenominatorMode::Active).unwrap();
            assert_eq!(c.points.len(), 101);
            assert!(c.values().all(|h| h == 0.0));
        }
    }

    #[test]
    fn uniform_counts_give_one() {
        let g = grid_from(vec![vec![3; 101]; 8], 24);
        let c = entropy_curve(&g, Estimator::Plugin, DenominatorMode::Active).unwrap();
        assert!(c.values().all(|h| h == 1.0));
        let c = entropy_curve(&g, Estimator::Plugin, DenominatorMode::Panel).unwrap();
        assert!(c.values().all(|h| h == 1.0));
    }

    #[test]
    fn lag_points_are_flagged() {
        let mut rows = vec![vec![0; 101]; 8];
        rows[0][10..].fill(2);
        rows[1][10..].fill(1);
        let g = grid_from(rows, 3);
        let c = entropy_curve(&g, Estimator::ChaoShen, DenominatorMode::Active).unwrap();
        for p in &c.points[..10] {
            assert_eq!(p.value, 0.0);
            assert_eq!(p.flags, PointFlags::NO_DATA);
        }
        assert!(c.points[10..]
            .iter()
            .all(|p| !p.flags.no_data && p.value > 0.0));
        assert_eq!(c.value_at(50.2), Some(c.points[50].value));
    }
}
