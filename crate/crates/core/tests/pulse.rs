mod common;

use proptest::prelude::*;
use wgtherm_core::pulse::{self, PulseSpec, QuadratureConfig};
use wgtherm_core::scattering::{amplitudes, ScatteringInput};
use wgtherm_core::ModelParams;

fn tight() -> QuadratureConfig {
    QuadratureConfig {
        abs_tol: 1e-12,
        ..Default::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_cauchy_closed_form(
        delta in -5.0f64..5.0,
        gamma in 1e-3f64..2.0,
        ratio in 2.0f64..5000.0,
        x in -1.0f64..0.0,
    ) {
        let eta = gamma / ratio;
        let r = pulse::pulse_reflection_at_x(&PulseSpec::new(delta, eta).unwrap(), gamma, 1.0, x, &tight()).unwrap();
        let exact = common::cauchy_pulse_reflection(delta + x, gamma, eta);
        prop_assert!((r.value - exact).abs() < 1e-10, "{} vs {}", r.value, exact);
        prop_assert!(r.error <= 1e-12);
    }

    #[test]
    fn bounded_and_below_peak(delta in -5.0f64..5.0, gamma in 1e-3f64..2.0, log_theta in -3.0f64..3.0) {
        let p = ModelParams::dimensionless(gamma).unwrap();
        let pulse = PulseSpec::with_width_ratio(delta, gamma, 20.0).unwrap();
        let r = pulse::pulse_reflection(&pulse, &p, 10f64.powf(log_theta), &QuadratureConfig::default()).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.value));
        // averaging can never beat the full-reflection limit γ/(γ+η)
        prop_assert!(r.value <= 20.0 / 21.0 + 1e-8);
    }

    #[test]
    fn mirror_symmetric_without_coupling(delta in 0.0f64..5.0, gamma in 1e-2f64..2.0) {
        let at = |d: f64| {
            pulse::pulse_reflection_at_x(&PulseSpec::new(d, gamma / 20.0).unwrap(), gamma, 0.0, -0.3, &tight())
                .unwrap()
                .value
        };
        prop_assert!((at(delta) - at(-delta)).abs() < 1e-11);
    }
}

#[test]
fn trapezoid_oracle_agrees() {
    for (s, gamma) in [(0.0, 0.1), (0.3, 0.5), (-1.7, 0.05), (4.0, 2.0)] {
        let eta = gamma / 20.0;
        let r = pulse::pulse_reflection_at_x(&PulseSpec::new(s, eta).unwrap(), gamma, 0.0, -0.5, &tight())
            .unwrap();
        let oracle = common::trapezoid_pulse_reflection(s, gamma, eta, 1_000_000);
        assert!((r.value - oracle).abs() < 1e-6, "s {s}: {} vs {oracle}", r.value);
    }
}

#[test]
fn converges_to_monochromatic_as_width_shrinks() {
    let p = ModelParams::dimensionless(0.1).unwrap();
    let (delta, theta) = (0.8, 1.5);
    let mono = amplitudes(&ScatteringInput::from_params(&p, delta, theta).unwrap()).reflection;
    let mut last = f64::INFINITY;
    for ratio in [20.0, 200.0, 2000.0, 20000.0] {
        let pulse = PulseSpec::with_width_ratio(delta, 0.1, ratio).unwrap();
        let err = (pulse::pulse_reflection(&pulse, &p, theta, &tight())
            .unwrap()
            .value
            - mono)
            .abs();
        assert!(err < last);
        last = err;
    }
    assert!(last < 1e-4);
}

#[test]
fn narrow_pulse_error_is_width_over_linewidth_on_resonance() {
    // R_pulse(s = 0) = γ/(γ + η), so the narrow-pulse gap is η/(γ + η)
    let gamma = 0.4;
    let eta = gamma / 2000.0;
    let r =
        pulse::pulse_reflection_at_x(&PulseSpec::new(0.5, eta).unwrap(), gamma, 1.0, -0.5, &tight()).unwrap();
    assert!((1.0 - r.value - eta / (gamma + eta)).abs() < 1e-12);
}

#[test]
fn sweep_is_ordered_and_reproducible() {
    let p = ModelParams::dimensionless(0.5).unwrap();
    let pulse = PulseSpec::with_width_ratio(0.8, 0.5, 20.0).unwrap();
    let grid = wgtherm_core::grid::logspace(1e-2, 1e2, 25);
    let a = pulse::pulse_reflection_sweep(&pulse, &p, &grid, &QuadratureConfig::default()).unwrap();
    let b = pulse::pulse_reflection_sweep(&pulse, &p, &grid, &QuadratureConfig::default()).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().map(|(t, _)| *t).eq(grid.iter().copied()));
}
