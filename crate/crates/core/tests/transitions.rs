use lipkin_core::analysis::{correlation_energy_curvature, detect_transitions};
use lipkin_core::record::{evaluate_point, SweepRecord};
use lipkin_core::ModelKind;

fn sweep(model: ModelKind, n: u32, lo: f64, hi: f64, steps: usize) -> Vec<SweepRecord> {
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .map(|chi| evaluate_point(model, n, chi, 1.0).unwrap())
        .collect()
}

#[test]
fn two_level_jump_sits_at_chi_one() {
    let records = sweep(ModelKind::TwoLevel, 20, 0.2, 3.0, 200);
    let step = 2.8 / 199.0;
    let found = detect_transitions(&records).unwrap();
    assert_eq!(found.len(), 1, "{found:?}");
    assert!((found[0].chi - 1.0).abs() <= step, "{found:?}");

    // The largest jump of the raw series is at the grid point nearest χ = 1.
    let (chi, series) = correlation_energy_curvature(&records).unwrap();
    let k = (1..series.len())
        .max_by(|&a, &b| {
            (series[a] - series[a - 1])
                .abs()
                .total_cmp(&(series[b] - series[b - 1]).abs())
        })
        .unwrap();
    assert!((chi[k] - 1.0).abs() <= 1.5 * step && (chi[k - 1] - 1.0).abs() <= 1.5 * step);
}

#[test]
fn three_level_has_two_jumps() {
    let records = sweep(ModelKind::ThreeLevel, 10, 0.2, 5.0, 240);
    let step = 4.8 / 239.0;
    let found = detect_transitions(&records).unwrap();
    assert_eq!(found.len(), 2, "{found:?}");
    assert!((found[0].chi - 1.0).abs() <= step, "{found:?}");
    assert!((found[1].chi - 3.0).abs() <= step, "{found:?}");
}

#[test]
fn weak_coupling_grid_has_no_jump() {
    let records = sweep(ModelKind::TwoLevel, 20, 0.05, 0.5, 40);
    assert!(detect_transitions(&records).unwrap().is_empty());
}

#[test]
fn too_short_sweeps_are_rejected() {
    let records = sweep(ModelKind::TwoLevel, 6, 0.2, 3.0, 12);
    assert!(detect_transitions(&records).is_err());
}
