//! Expansion of selection events into per-time dominance counts.

use crate::error::{domain, Error, Result};
use crate::model::{Measurement, TdsDataset};

pub const DEFAULT_GRID_SIZE: usize = 100;

/// Normalized time of grid point `k` on a grid of `grid_size` intervals.
#[inline]
pub fn grid_tau(k: usize, grid_size: usize) -> f64 {
    100.0 * k as f64 / grid_size as f64
}

/// Per-attribute dominance counts `n_a(τ)` on the grid `τ_k = 100·k/G`, `k = 0..=G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceGrid {
    pub sample_id: String,
    pub grid_size: usize,
    /// `counts[a][k]`: measurements holding attribute `a` dominant at `τ_k`.
    pub counts: Vec<Vec<u32>>,
    /// `totals[k] = Σ_a counts[a][k]`.
    pub totals: Vec<u32>,
    /// Number of measurements of the sample, i.e. `n_r · n_p` for a complete design.
    pub panel_denominator: u32,
}

impl DominanceGrid {
    pub fn n_attributes(&self) -> usize {
        self.counts.len()
    }

    /// Number of grid points, `G + 1`.
    pub fn len(&self) -> usize {
        self.totals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.totals.is_empty()
    }

    pub fn tau(&self, k: usize) -> f64 {
        grid_tau(k, self.grid_size)
    }

    pub fn taus(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|k| self.tau(k))
    }

    /// Count vector over all attributes at grid point `k`.
    pub fn counts_at(&self, k: usize) -> Vec<u32> {
        self.counts.iter().map(|row| row[k]).collect()
    }
}

/// Expands a sample on the default 101-point grid.
pub fn expand_dominance(dataset: &TdsDataset, sample_id: &str) -> Result<DominanceGrid> {
    expand_dominance_with(dataset, sample_id, DEFAULT_GRID_SIZE)
}

pub fn expand_dominance_with(
    dataset: &TdsDataset,
    sample_id: &str,
    grid_size: usize,
) -> Result<DominanceGrid> {
    if grid_size == 0 {
        return Err(domain("grid size must be at least 1"));
    }
    let measurements: Vec<&Measurement> = dataset.measurements_for(sample_id).collect();
    if measurements.is_empty() {
        return Err(Error::NotFound(format!("sample `{sample_id}`")));
    }
    let n_attr = dataset.attributes.len();
    let mut counts = vec![vec![0u32; grid_size + 1]; n_attr];
    for m in &measurements {
        accumulate(m, grid_size, &mut counts)?;
    }
    let totals = (0..=grid_size)
        .map(|k| counts.iter().map(|row| row[k]).sum())
        .collect();
    Ok(DominanceGrid {
        sample_id: sample_id.to_owned(),
        grid_size,
        counts,
        totals,
        panel_denominator: measurements.len() as u32,
    })
}

// Sweeps the grid once, advancing through the (sorted) events.
fn accumulate(m: &Measurement, grid_size: usize, counts: &mut [Vec<u32>]) -> Result<()> {
    let onsets: Vec<f64> = m.normalized_onsets().collect();
    let mut next = 0;
    for k in 0..=grid_size {
        let tau = grid_tau(k, grid_size);
        while next < onsets.len() && onsets[next] <= tau {
            next += 1;
        }
        if let Some(i) = next.checked_sub(1) {
            let a = m.events[i].attribute_idx;
            let row = counts.get_mut(a).ok_or_else(|| {
                domain(format!("attribute index {a} out of range in {}", m.key()))
            })?;
            row[k] += 1;
        }
    }
    Ok(())
}
