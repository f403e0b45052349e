//! SI conversions. The rest of the crate works in `θ = k_B T / (ħ ω₁)`.

use crate::error::{Error, Result};

/// Reduced Planck constant, J·s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K (CODATA 2018, exact).
pub const K_B: f64 = 1.380_649e-23;

/// Angular frequency `2π f` for a frequency in Hz.
pub fn angular_from_hz(hz: f64) -> f64 {
    std::f64::consts::TAU * hz
}

fn check_omega(omega1: f64) -> Result<()> {
    if omega1.is_finite() && omega1 > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "omega1 must be finite and > 0 rad/s, got {omega1}"
        )))
    }
}

/// `k_B / (ħ ω₁)` in K⁻¹.
pub fn inverse_temperature_scale(omega1: f64) -> Result<f64> {
    check_omega(omega1)?;
    Ok(K_B / (HBAR * omega1))
}

/// `ħ ω₁ / k_B` in K: the temperature at which `θ = 1`.
pub fn temperature_scale(omega1: f64) -> Result<f64> {
    check_omega(omega1)?;
    Ok(HBAR * omega1 / K_B)
}

pub fn kelvin_to_theta(kelvin: f64, omega1: f64) -> Result<f64> {
    if !(kelvin.is_finite() && kelvin >= 0.0) {
        return Err(Error::domain(format!(
            "temperature must be finite and >= 0 K, got {kelvin}"
        )));
    }
    Ok(kelvin * inverse_temperature_scale(omega1)?)
}

pub fn theta_to_kelvin(theta: f64, omega1: f64) -> Result<f64> {
    if !(theta.is_finite() && theta >= 0.0) {
        return Err(Error::domain(format!(
            "temperature must be finite and >= 0, got {theta}"
        )));
    }
    Ok(theta * temperature_scale(omega1)?)
}
