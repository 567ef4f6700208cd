use proptest::prelude::*;
use tds_entropy::{
    dominant_at, expand_dominance, expand_dominance_with, validate_dataset, AttributeSet,
    Measurement, SelectionEvent, TdsDataset,
};

fn arb_measurement(idx: usize) -> impl Strategy<Value = Measurement> {
    (
        1.0f64..60.0,
        prop::collection::vec((0usize..4, 0.0f64..1.0), 0..=4),
    )
        .prop_map(move |(swallow_s, mut raw)| {
            raw.sort_by(|a, b| a.1.total_cmp(&b.1));
            raw.dedup_by(|a, b| a.1 == b.1);
            Measurement {
                panelist_id: format!("p{idx}"),
                repetition_idx: 1,
                sample_id: "s".into(),
                swallow_s,
                events: raw
                    .into_iter()
                    .map(|(attribute_idx, f)| SelectionEvent {
                        attribute_idx,
                        onset_s: f * swallow_s,
                    })
                    .collect(),
            }
        })
}

fn arb_dataset() -> impl Strategy<Value = TdsDataset> {
    (1usize..=5)
        .prop_flat_map(|n| (0..n).map(arb_measurement).collect::<Vec<_>>())
        .prop_map(|ms| TdsDataset::new(AttributeSet::new(["a", "b", "c", "d"]).unwrap(), ms, 1))
}

proptest! {
    #[test]
    fn grid_matches_brute_force(ds in arb_dataset()) {
        prop_assert!(validate_dataset(&ds).is_ok());
        let g = expand_dominance(&ds, "s").unwrap();
        for k in 0..=100usize {
            let mut expect = vec![0u32; 4];
            for m in &ds.measurements {
                if let Some(a) = dominant_at(m, k as f64) {
                    expect[a] += 1;
                }
            }
            prop_assert_eq!(g.counts_at(k), expect);
        }
    }

    #[test]
    fn totals_are_bounded_and_non_decreasing(ds in arb_dataset(), grid_size in 1usize..=200) {
        let g = expand_dominance_with(&ds, "s", grid_size).unwrap();
        prop_assert_eq!(g.len(), grid_size + 1);
        for k in 0..g.len() {
            let sum: u32 = g.counts.iter().map(|r| r[k]).sum();
            prop_assert_eq!(sum, g.totals[k]);
            prop_assert!(g.totals[k] <= g.panel_denominator);
        }
        prop_assert!(g.totals.windows(2).all(|w| w[0] <= w[1]));
        let active = ds.measurements.iter().filter(|m| !m.events.is_empty()).count() as u32;
        prop_assert_eq!(*g.totals.last().unwrap(), active);
    }

    #[test]
    fn invariant_under_time_rescaling(ds in arb_dataset(), exp in -6i32..=6) {
        // power-of-two factors keep the rescaling exact in floating point
        let factor = 2f64.powi(exp);
        let mut scaled = ds.clone();
        for m in &mut scaled.measurements {
            m.swallow_s *= factor;
            for e in &mut m.events {
                e.onset_s *= factor;
            }
        }
        prop_assert_eq!(expand_dominance(&ds, "s").unwrap(), expand_dominance(&scaled, "s").unwrap());
    }

    #[test]
    fn at_most_one_dominant(m in arb_measurement(0), tau in 0.0f64..=100.0) {
        let hits = m.events.iter().enumerate().filter(|(i, _)| {
            let start = 100.0 * m.events[*i].onset_s / m.swallow_s;
            let end = m.events.get(i + 1).map_or(f64::INFINITY, |n| 100.0 * n.onset_s / m.swallow_s);
            start <= tau && tau < end
        }).count();
        prop_assert!(hits <= 1);
        prop_assert_eq!(hits == 1, dominant_at(&m, tau).is_some());
    }
}
