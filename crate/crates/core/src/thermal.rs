//! Thermal statistics of the probe atom.
//!
//! Temperatures are dimensionless, `θ = k_B T / (ħ ω₁)`. `θ = 0` is handled by
//! its analytic limit everywhere, and no function evaluates `e^{1/θ}` in a way
//! that can overflow into a NaN.

use crate::error::{Error, Result};

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "temperature must be finite and >= 0, got {theta}"
        )))
    }
}

/// Bose-Einstein occupation of the bath mode at `ω₁`, `n = 1/(e^{1/θ} − 1)`.
pub fn occupation(theta: f64) -> Result<f64> {
    check_theta(theta)?;
    if theta == 0.0 {
        return Ok(0.0);
    }
    // exp_m1 overflows to +inf for tiny θ, giving n = 0 exactly.
    Ok(1.0 / (1.0 / theta).exp_m1())
}

/// Thermal expectation `x = ⟨σ₁ᶻ⟩ = (1 − e^{1/θ})/(1 + e^{1/θ}) = −tanh(1/(2θ))`.
pub fn sigma1z_thermal(theta: f64) -> Result<f64> {
    check_theta(theta)?;
    if theta == 0.0 {
        return Ok(-1.0);
    }
    Ok(-(0.5 / theta).tanh())
}

/// Inverse of [`sigma1z_thermal`] on `x ∈ [−1, 0)`.
pub fn theta_from_sigma1z(x: f64) -> Result<f64> {
    if !(-1.0..0.0).contains(&x) {
        return Err(Error::domain(format!(
            "thermal <sigma_z> must lie in [-1, 0), got {x}"
        )));
    }
    if x == -1.0 {
        return Ok(0.0);
    }
    Ok(0.5 / (-x).atanh())
}

/// Boltzmann factor `e^{−1/θ}` written through `x`: `(1 + x)/(1 − x)`.
pub fn boltzmann_factor(x: f64) -> f64 {
    (1.0 + x) / (1.0 - x)
}

/// Steady-state populations `(p_gg, p_eg)` of the two-atom system with atom 2
/// in its ground state: `((n+1)/(2n+1), n/(2n+1))`.
pub fn steady_populations(theta: f64) -> Result<(f64, f64)> {
    let n = occupation(theta)?;
    if n == 0.0 {
        return Ok((1.0, 0.0));
    }
    let p_eg = 1.0 / (2.0 + 1.0 / n);
    let p_gg = 1.0 / (1.0 + n / (n + 1.0));
    Ok((p_gg, p_eg))
}

/// Effective temperature of a two-level population, `θ = 1/ln(p_g/p_e)`.
///
/// A ground-state population (`p_e = 0`) returns `θ = 0`. Inverted or equal
/// populations have no positive temperature and are rejected.
pub fn effective_temperature(p_g: f64, p_e: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p_g) || !(0.0..=1.0).contains(&p_e) {
        return Err(Error::domain(format!(
            "populations must lie in [0, 1], got ({p_g}, {p_e})"
        )));
    }
    if (p_g + p_e - 1.0).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "populations must sum to 1, got {}",
            p_g + p_e
        )));
    }
    if p_e == 0.0 {
        return Ok(0.0);
    }
    if p_e >= p_g {
        return Err(Error::domain(format!(
            "population inversion (p_e = {p_e} >= p_g = {p_g}) has no positive effective temperature"
        )));
    }
    Ok(1.0 / ((p_g - p_e) / p_e).ln_1p())
}

/// A temperature together with its derived bath occupation and `⟨σ₁ᶻ⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    pub theta: f64,
    pub n: f64,
    pub x: f64,
}

impl ThermalPoint {
    pub fn new(theta: f64) -> Result<Self> {
        Ok(ThermalPoint {
            theta,
            n: occupation(theta)?,
            x: sigma1z_thermal(theta)?,
        })
    }

    pub fn populations(&self) -> (f64, f64) {
        steady_populations(self.theta).expect("theta validated on construction")
    }
}
