//! Monochromatic single-photon scattering off the waveguide atom.
//!
//! Only the even-parity mode `(r + l)/√2` couples to atom 2; it picks up the
//! unimodular factor
//!
//! ```text
//! t̄ = [Δ − J + iγ + (Δ + J + iγ) e^{−1/θ}] / [Δ − J − iγ + (Δ + J − iγ) e^{−1/θ}]
//! ```
//!
//! Substituting `e^{−1/θ} = (1 + x)/(1 − x)` and clearing the common factor
//! `2/(1 − x)` collapses both transitions into one effective detuning
//! `s = Δ + J x`:
//!
//! ```text
//! t̄ = (s + iγ)/(s − iγ),   t = s/(s − iγ),   r = iγ/(s − iγ)
//! ```
//!
//! so temperature enters only through `x = ⟨σ₁ᶻ⟩`, and `J = 0` needs no
//! special case.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::thermal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringInput {
    /// `Δ_ω = ω₂ − ω`.
    pub delta: f64,
    pub gamma: f64,
    pub coupling: f64,
    /// Thermal `⟨σ₁ᶻ⟩`.
    pub x: f64,
}

impl ScatteringInput {
    pub fn new(delta: f64, gamma: f64, coupling: f64, x: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::domain(format!("gamma must be > 0, got {gamma}")));
        }
        if !(-1.0..=0.0).contains(&x) {
            return Err(Error::domain(format!("<sigma_z> must lie in [-1, 0], got {x}")));
        }
        if !delta.is_finite() || !coupling.is_finite() {
            return Err(Error::domain("detuning and coupling must be finite"));
        }
        Ok(ScatteringInput {
            delta,
            gamma,
            coupling,
            x,
        })
    }

    pub fn from_theta(delta: f64, gamma: f64, coupling: f64, theta: f64) -> Result<Self> {
        ScatteringInput::new(delta, gamma, coupling, thermal::sigma1z_thermal(theta)?)
    }

    pub fn from_params(params: &ModelParams, delta: f64, theta: f64) -> Result<Self> {
        ScatteringInput::from_theta(delta, params.gamma, params.coupling, theta)
    }

    /// `s = Δ + J x`, the detuning from the thermally averaged transition.
    pub fn effective_detuning(&self) -> f64 {
        self.delta + self.coupling * self.x
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringResult {
    pub t_bar: Complex64,
    pub t: Complex64,
    pub r: Complex64,
    pub transmission: f64,
    pub reflection: f64,
}

pub fn even_mode_factor(input: &ScatteringInput) -> Complex64 {
    let s = input.effective_detuning();
    Complex64::new(s, input.gamma) / Complex64::new(s, -input.gamma)
}

pub fn amplitudes(input: &ScatteringInput) -> ScatteringResult {
    let s = input.effective_detuning();
    let denom = Complex64::new(s, -input.gamma);
    let t = Complex64::new(s, 0.0) / denom;
    let r = Complex64::new(0.0, input.gamma) / denom;
    ScatteringResult {
        t_bar: even_mode_factor(input),
        t,
        r,
        transmission: t.norm_sqr(),
        reflection: r.norm_sqr(),
    }
}

/// Reflection probability from the effective detuning alone,
/// `R = γ² / (s² + γ²)`.
pub fn reflection_at(s: f64, gamma: f64) -> f64 {
    let g2 = gamma * gamma;
    g2 / (s * s + g2)
}

/// `(T, R)` in the reduced variables `Γ = γ/J`, `x`, `x₀ = −Δ/J`.
pub fn probabilities_dimensionless(x: f64, x0: f64, reduced_gamma: f64) -> Result<(f64, f64)> {
    if !(reduced_gamma.is_finite() && reduced_gamma > 0.0) {
        return Err(Error::domain(format!(
            "reduced gamma must be > 0, got {reduced_gamma}"
        )));
    }
    let d2 = (x - x0) * (x - x0);
    let g2 = reduced_gamma * reduced_gamma;
    let denom = d2 + g2;
    Ok((d2 / denom, g2 / denom))
}

/// Detuning of maximal reflection, `Δ* = −J x(θ)`.
pub fn reflection_peak_detuning(params: &ModelParams, theta: f64) -> Result<f64> {
    Ok(-params.coupling * thermal::sigma1z_thermal(theta)?)
}

/// `R_ω` over a grid of detunings at fixed temperature.
pub fn reflection_spectrum(params: &ModelParams, theta: f64, deltas: &[f64]) -> Result<Vec<(f64, f64)>> {
    if deltas.is_empty() {
        return Err(Error::domain("detuning grid is empty"));
    }
    params.validate()?;
    let x = thermal::sigma1z_thermal(theta)?;
    deltas
        .iter()
        .map(|&d| {
            let input = ScatteringInput::new(d, params.gamma, params.coupling, x)?;
            Ok((d, amplitudes(&input).reflection))
        })
        .collect()
}
