//! Reflection of a single-photon pulse with a Lorentzian spectrum.
//!
//! The pulse amplitude `√(η/π) / (i(ω_t − ω) + η)` gives the normalized
//! spectral density `(η/π) / ((ω_t − ω)² + η²)`. The pulse reflection is the
//! monochromatic `R_ω` averaged over that density.
//!
//! With `u = ω − ω_t` the photon sees `Δ_ω = Δ − u`. The central window
//! `|u| ≤ window·η` is integrated directly; the two tails are mapped through
//! `u = η tan φ`, which turns the Lorentzian measure into `dφ/π` on a finite
//! interval, so nothing is truncated.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::quad;
use crate::scattering::reflection_at;
use crate::thermal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSpec {
    /// Carrier detuning `Δ = ω₂ − ω_t`.
    pub delta: f64,
    /// Spectral half-width `η`.
    pub eta: f64,
}

impl PulseSpec {
    pub fn new(delta: f64, eta: f64) -> Result<Self> {
        if !(eta.is_finite() && eta > 0.0) {
            return Err(Error::config("eta", format!("must be > 0, got {eta}")));
        }
        if !delta.is_finite() {
            return Err(Error::config("delta", "must be finite"));
        }
        Ok(PulseSpec { delta, eta })
    }

    /// `η = γ / ratio`; the thermometer figures use `ratio = 20`.
    pub fn with_width_ratio(delta: f64, gamma: f64, ratio: f64) -> Result<Self> {
        PulseSpec::new(delta, gamma / ratio)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Half-width of the directly integrated window, in units of `η`.
    pub window: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            window: 200.0,
            abs_tol: 1e-8,
            max_subdivisions: 20_000,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.window.is_finite() && self.window >= 10.0) {
            return Err(Error::config(
                "window",
                format!("must be >= 10, got {}", self.window),
            ));
        }
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::config(
                "abs_tol",
                format!("must be > 0, got {}", self.abs_tol),
            ));
        }
        if self.max_subdivisions < 4 {
            return Err(Error::config("max_subdivisions", "must be >= 4"));
        }
        Ok(())
    }
}

/// `|S(ω)|² = (η/π) / (offset² + η²)`.
pub fn spectral_weight(offset: f64, eta: f64) -> f64 {
    eta / PI / (offset * offset + eta * eta)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseReflection {
    pub value: f64,
    /// Quadrature error estimate.
    pub error: f64,
}

#[derive(Debug, Clone, Copy)]
enum Region {
    Window,
    Tail,
}

/// Pulse reflection with the probe state given directly by `x = ⟨σ₁ᶻ⟩`.
pub fn pulse_reflection_at_x(
    pulse: &PulseSpec,
    gamma: f64,
    coupling: f64,
    x: f64,
    quad: &QuadratureConfig,
) -> Result<PulseReflection> {
    quad.validate()?;
    let eta = pulse.eta;
    // R_ω(Δ − u) peaks where Δ − u + J x = 0
    let resonance = pulse.delta + coupling * x;
    let reflect = |u: f64| reflection_at(resonance - u, gamma);

    let edge = quad.window * eta;
    let phi_edge = quad.window.atan();
    let mut window = vec![-edge, edge];
    let mut left = vec![-FRAC_PI_2, -phi_edge];
    let mut right = vec![phi_edge, FRAC_PI_2];
    for u in [resonance - gamma, resonance, resonance + gamma] {
        if u.abs() < edge {
            window.push(u);
        } else {
            let phi = (u / eta).atan();
            if u < 0.0 && phi > -FRAC_PI_2 {
                left.push(phi);
            } else if u > 0.0 && phi < FRAC_PI_2 {
                right.push(phi);
            }
        }
    }
    let mut segments = Vec::new();
    for (mut pts, region) in [
        (left, Region::Tail),
        (window, Region::Window),
        (right, Region::Tail),
    ] {
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        segments.extend(pts.windows(2).map(|w| (w[0], w[1], region)));
    }

    let integrand = |region: Region, t: f64| match region {
        Region::Window => spectral_weight(t, eta) * reflect(t),
        Region::Tail => reflect(eta * t.tan()) / PI,
    };
    let integral = quad::integrate(&segments, integrand, quad.abs_tol, quad.max_subdivisions)?;
    Ok(PulseReflection {
        value: integral.value.clamp(0.0, 1.0),
        error: integral.error,
    })
}

pub fn pulse_reflection(
    pulse: &PulseSpec,
    params: &ModelParams,
    theta: f64,
    quad: &QuadratureConfig,
) -> Result<PulseReflection> {
    params.validate()?;
    let x = thermal::sigma1z_thermal(theta)?;
    pulse_reflection_at_x(pulse, params.gamma, params.coupling, x, quad)
}

/// Pulse reflection over a temperature grid; a failing point reports its `θ`.
pub fn pulse_reflection_sweep(
    pulse: &PulseSpec,
    params: &ModelParams,
    thetas: &[f64],
    quad: &QuadratureConfig,
) -> Result<Vec<(f64, PulseReflection)>> {
    if thetas.is_empty() {
        return Err(Error::domain("temperature grid is empty"));
    }
    thetas
        .iter()
        .map(|&theta| {
            pulse_reflection(pulse, params, theta, quad)
                .map(|r| (theta, r))
                .map_err(|e| e.at_theta(theta))
        })
        .collect()
}
