mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use wgtherm_core::scattering::{self, amplitudes, probabilities_dimensionless, ScatteringInput};
use wgtherm_core::{thermal, ModelParams};

fn draw() -> impl Strategy<Value = (f64, f64, f64)> {
    (-5.0f64..5.0, 1e-6f64..2.0, -3.0f64..3.0).prop_map(|(d, g, l)| (d, g, 10f64.powf(l)))
}

proptest! {
    #[test]
    fn flux_is_conserved((delta, gamma, theta) in draw()) {
        let a = amplitudes(&ScatteringInput::from_theta(delta, gamma, 1.0, theta).unwrap());
        prop_assert!((a.transmission + a.reflection - 1.0).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&a.reflection));
    }

    #[test]
    fn even_mode_factor_is_a_phase((delta, gamma, theta) in draw()) {
        let a = amplitudes(&ScatteringInput::from_theta(delta, gamma, 1.0, theta).unwrap());
        let one = Complex64::new(1.0, 0.0);
        prop_assert!((a.t_bar.norm() - 1.0).abs() < 1e-12);
        prop_assert!((a.t - (one + a.t_bar) / 2.0).norm() < 1e-12);
        prop_assert!((a.r - (a.t_bar - one) / 2.0).norm() < 1e-12);
    }

    #[test]
    fn reduced_form_agrees_with_amplitudes((delta, gamma, theta) in draw(), coupling in 0.05f64..3.0) {
        let input = ScatteringInput::from_theta(delta, gamma, coupling, theta).unwrap();
        let a = amplitudes(&input);
        let (t, r) = probabilities_dimensionless(input.x, -delta / coupling, gamma / coupling).unwrap();
        prop_assert!((a.transmission - t).abs() < 1e-12);
        prop_assert!((a.reflection - r).abs() < 1e-12);
    }

    #[test]
    fn uncoupled_atom_is_bare_two_level((delta, gamma, theta) in draw()) {
        let a = amplitudes(&ScatteringInput::from_theta(delta, gamma, 0.0, theta).unwrap());
        let (t, r) = common::two_level(delta, gamma);
        prop_assert!((a.t - t).norm() < 1e-12);
        prop_assert!((a.r - r).norm() < 1e-12);
    }

    #[test]
    fn cold_probe_shifts_resonance_by_coupling(delta in -5.0f64..5.0, gamma in 1e-3f64..2.0, coupling in 0.1f64..2.0) {
        let a = amplitudes(&ScatteringInput::from_theta(delta, gamma, coupling, 1e-4).unwrap());
        let (t, r) = common::two_level(delta - coupling, gamma);
        prop_assert!((a.t - t).norm() < 1e-9);
        prop_assert!((a.r - r).norm() < 1e-9);
    }

    #[test]
    fn full_reflection_exactly_at_peak(log_theta in -1.0f64..3.0, gamma in 1e-3f64..2.0) {
        let theta = 10f64.powf(log_theta);
        let p = ModelParams::dimensionless(gamma).unwrap();
        let peak = scattering::reflection_peak_detuning(&p, theta).unwrap();
        let a = amplitudes(&ScatteringInput::from_params(&p, peak, theta).unwrap());
        prop_assert!((a.reflection - 1.0).abs() < 1e-12);
        prop_assert!((peak - (0.5 / theta).tanh()).abs() < 1e-12);
    }
}

#[test]
fn boltzmann_form_oracle() {
    for theta in [0.05, 0.3, 1.0, 4.0, 80.0] {
        let x = common::x_boltzmann(theta);
        assert!((thermal::sigma1z_thermal(theta).unwrap() - x).abs() < 1e-14);
        for delta in [-1.0, 0.0, 0.37, 1.0] {
            let a = amplitudes(&ScatteringInput::from_theta(delta, 0.3, 1.0, theta).unwrap());
            let s = delta + x;
            let t_bar = Complex64::new(s, 0.3) / Complex64::new(s, -0.3);
            assert!((a.t_bar - t_bar).norm() < 1e-14);
        }
    }
}

#[test]
fn complete_reflection_needs_detuning_inside_coupling_window() {
    let thetas = wgtherm_core::grid::logspace(1e-2, 1e4, 2000);
    let best = |delta: f64| {
        thetas
            .iter()
            .map(|&t| amplitudes(&ScatteringInput::from_theta(delta, 0.1, 1.0, t).unwrap()).reflection)
            .fold(0.0, f64::max)
    };
    for delta in [0.05, 0.3, 0.6, 0.95] {
        assert!(best(delta) > 0.999, "delta {delta}: {}", best(delta));
    }
    for delta in [-0.5, 1.5] {
        assert!(best(delta) < 0.05);
    }
}

#[test]
fn spectrum_rows_follow_grid() {
    let p = ModelParams::dimensionless(0.5).unwrap();
    let grid = [-1.0, 0.0, 0.4621, 2.0];
    let rows = scattering::reflection_spectrum(&p, 1.0, &grid).unwrap();
    assert_eq!(rows.len(), grid.len());
    for ((d, r), g) in rows.iter().zip(grid) {
        assert_eq!(*d, g);
        let a = amplitudes(&ScatteringInput::from_params(&p, g, 1.0).unwrap());
        assert_eq!(*r, a.reflection);
    }
    assert!(scattering::reflection_spectrum(&p, 1.0, &[]).is_err());
}

#[test]
fn invalid_inputs() {
    assert!(ScatteringInput::new(0.0, 0.0, 1.0, -0.5).is_err());
    assert!(ScatteringInput::new(0.0, 0.1, 1.0, 0.2).is_err());
    assert!(ScatteringInput::new(f64::NAN, 0.1, 1.0, -0.5).is_err());
    assert!(ScatteringInput::from_theta(0.0, 0.1, 1.0, -1.0).is_err());
}
