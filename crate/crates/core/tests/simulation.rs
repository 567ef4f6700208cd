use tds_entropy::estimators::plugin_entropy;
use tds_entropy::simulate::Phase;
use tds_entropy::{
    curve_features, empirical_truth, entropy_curve, expand_dominance, generate_panel,
    sample_measurement, validate_dataset, DenominatorMode, Estimator, SimulatorConfig,
};

/// Three phases, short dwell: at each phase midpoint the dominant attribute
/// was almost surely selected within that phase.
fn three_phase() -> SimulatorConfig {
    SimulatorConfig {
        duration_mean_s: 40.0,
        duration_sd_s: 5.0,
        lag_mean_s: 2.0,
        lag_sd_s: 1.0,
        dwell_mean_s: 0.5,
        seed: 7,
        phases: vec![
            Phase {
                start: 0.0,
                end: 0.2,
                weights: vec![6.0, 2.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
            },
            Phase {
                start: 0.2,
                end: 0.7,
                weights: vec![1.0, 1.0, 2.0, 1.0, 3.0, 1.0, 0.5, 0.5],
            },
            Phase {
                start: 0.7,
                end: 1.0,
                weights: vec![0.0, 0.0, 0.0, 4.0, 0.0, 2.0, 1.0, 1.0],
            },
        ],
        ..SimulatorConfig::default()
    }
}

#[test]
fn middle_phase_truth_within_three_standard_errors() {
    let c = three_phase();
    let n_mc = 100_000u64;
    let p = empirical_truth(&c, 45.0, n_mc).unwrap();
    let expect = c.phases[1].distribution();
    for (a, (&got, &want)) in p.iter().zip(&expect).enumerate() {
        let se = (want * (1.0 - want) / n_mc as f64).sqrt();
        assert!(
            (got - want).abs() <= 3.0 * se.max(1e-9),
            "attribute {a}: {got} vs {want} (se {se})"
        );
        assert!(se <= 0.5 / (n_mc as f64).sqrt());
    }
}

#[test]
fn symmetric_two_attribute_truth() {
    let mut c = three_phase();
    c.attributes = tds_entropy::AttributeSet::new(["x", "y"]).unwrap();
    c.phases = vec![Phase {
        start: 0.0,
        end: 1.0,
        weights: vec![1.0, 1.0],
    }];
    let p = empirical_truth(&c, 60.0, 100_000).unwrap();
    assert!(
        (p[0] - 0.5).abs() < 0.01 && (p[1] - 0.5).abs() < 0.01,
        "{p:?}"
    );
}

#[test]
fn generated_measurements_are_valid() {
    let c = SimulatorConfig {
        n_p: 40,
        ..SimulatorConfig::default()
    };
    for sample in ["a", "b"] {
        let ds = generate_panel(&c, sample).unwrap();
        let report = validate_dataset(&ds);
        assert!(report.is_ok(), "{report}");
        for m in &ds.measurements {
            assert!(m.events.windows(2).all(|w| w[0].onset_s < w[1].onset_s));
            assert!(m.events.iter().all(|e| e.onset_s <= m.swallow_s));
            assert!(m
                .events
                .windows(2)
                .all(|w| w[0].attribute_idx != w[1].attribute_idx));
        }
    }
}

#[test]
fn changing_repetition_leaves_others_alone() {
    let c = SimulatorConfig::default();
    let a1 = sample_measurement(&c, "p01", 1, "s").unwrap();
    let a2 = sample_measurement(&c, "p01", 2, "s").unwrap();
    let panel = generate_panel(&c, "s").unwrap();
    assert_eq!(panel.measurements[0], a1);
    assert_eq!(panel.measurements[1], a2);
    assert_ne!(a1.events, a2.events);
}

#[test]
fn large_panel_converges_to_truth() {
    let c = three_phase();
    let tau = 45.0;
    let truth = plugin_entropy(&empirical_truth(&c, tau, 100_000).unwrap(), 8).unwrap();
    let mut errors = Vec::new();
    for n_p in [20u32, 20_000] {
        let mut cfg = c.clone();
        cfg.n_p = n_p;
        cfg.n_r = 1;
        let g = expand_dominance(&generate_panel(&cfg, "s").unwrap(), "s").unwrap();
        let curve = entropy_curve(&g, Estimator::Plugin, DenominatorMode::Active).unwrap();
        errors.push((curve.points[45].value - truth).abs());
    }
    assert!(errors[1] < 0.01, "{errors:?}");
    assert!(errors[1] < errors[0], "{errors:?}");
}

#[test]
fn default_config_has_master_curve_shape() {
    let c = SimulatorConfig::default();
    let g = expand_dominance(&generate_panel(&c, "synthetic").unwrap(), "synthetic").unwrap();
    let h = entropy_curve(&g, Estimator::ChaoShen, DenominatorMode::Active).unwrap();
    let v = |tau: usize| h.points[tau].value;
    let mid_max = (30..=70).map(v).fold(f64::MIN, f64::max);
    assert!(v(10) < v(50));
    assert!(mid_max > v(90));
    assert!(v(100) > 0.0 && v(100) < 1.0);
    assert!(curve_features(&h).unwrap().rise_then_fall);
}
