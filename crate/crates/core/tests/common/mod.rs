//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `⟨σᶻ⟩` from the Boltzmann form `(1 − e^{1/θ}) / (1 + e^{1/θ})`.
pub fn x_boltzmann(theta: f64) -> f64 {
    let b = (1.0 / theta).exp();
    if b.is_infinite() {
        return -1.0;
    }
    (1.0 - b) / (1.0 + b)
}

/// Bare two-level atom in a waveguide at detuning `d`.
pub fn two_level(d: f64, gamma: f64) -> (Complex64, Complex64) {
    let den = Complex64::new(d, -gamma);
    (Complex64::new(d, 0.0) / den, Complex64::new(0.0, gamma) / den)
}

/// Lorentzian-convolved reflection: the Cauchy kernel shifts `γ → γ + η`
/// in the denominator, `R = γ(γ + η) / (s² + (γ + η)²)`.
pub fn cauchy_pulse_reflection(s: f64, gamma: f64, eta: f64) -> f64 {
    let w = gamma + eta;
    gamma * w / (s * s + w * w)
}

/// Pulse reflection by the composite trapezoid rule on `n` points, using
/// `u = η tan φ` so the whole real line maps onto `(−π/2, π/2)`.
pub fn trapezoid_pulse_reflection(s: f64, gamma: f64, eta: f64, n: usize) -> f64 {
    let f = |phi: f64| {
        let u = eta * phi.tan();
        let d = s - u;
        gamma * gamma / (d * d + gamma * gamma) / PI
    };
    let h = PI / (n - 1) as f64;
    // both endpoints sit at |u| = ∞ where the integrand vanishes
    (1..n - 1).map(|i| f(-FRAC_PI_2 + h * i as f64)).sum::<f64>() * h
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One random parameter set: `Δ ∈ [−5, 5]`, `γ ∈ (0, 2]`, `θ` log-uniform on
/// `[1e−3, 1e3]`, all in units of `J`.
#[derive(Debug, Clone, Copy)]
pub struct Draw {
    pub delta: f64,
    pub gamma: f64,
    pub theta: f64,
}

pub fn draw(rng: &mut ChaCha8Rng) -> Draw {
    let delta = rng.random_range(-5.0..=5.0);
    let gamma = 2.0 - rng.random_range(0.0..2.0);
    let theta = 10f64.powf(rng.random_range(-3.0..=3.0));
    Draw { delta, gamma, theta }
}
