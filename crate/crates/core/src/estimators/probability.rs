use super::DenominatorMode;
use crate::error::{Error, Result};
use crate::grid::DominanceGrid;

/// Selection probabilities `p(a|τ_k)` over all attributes at grid point `k`.
///
/// Panel mode divides by the panel denominator and may sum to less than one
/// during the lag period; active mode divides by `N(τ_k)` and sums to one.
pub fn selection_probabilities(
    grid: &DominanceGrid,
    k: usize,
    mode: DenominatorMode,
) -> Result<Vec<f64>> {
    if k >= grid.len() {
        return Err(Error::Domain(format!(
            "grid index {k} out of range (grid has {} points)",
            grid.len()
        )));
    }
    let denominator = match mode {
        DenominatorMode::Panel => grid.panel_denominator,
        DenominatorMode::Active => grid.totals[k],
    };
    if denominator == 0 {
        return Err(Error::NoData(format!(
            "no dominant attribute at tau {} of sample `{}`",
            grid.tau(k),
            grid.sample_id
        )));
    }
    let d = f64::from(denominator);
    Ok(grid
        .counts
        .iter()
        .map(|row| f64::from(row[k]) / d)
        .collect())
}
