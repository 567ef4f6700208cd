//! Fixtures shared by the pipeline benchmarks.

use tds_entropy::{expand_dominance, generate_panel, DominanceGrid, SimulatorConfig, TdsDataset};

/// Sample id used by every fixture.
pub const SAMPLE: &str = "bench";

/// Default simulator config scaled to `n_p` panelists.
pub fn config(n_p: u32) -> SimulatorConfig {
    SimulatorConfig {
        samples: vec![SAMPLE.into()],
        n_p,
        ..SimulatorConfig::default()
    }
}

pub fn panel(n_p: u32) -> TdsDataset {
    generate_panel(&config(n_p), SAMPLE).expect("default config generates")
}

pub fn grid(n_p: u32) -> DominanceGrid {
    expand_dominance(&panel(n_p), SAMPLE).expect("sample present")
}
