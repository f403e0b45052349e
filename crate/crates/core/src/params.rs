//! Physical configuration of the two-atom, waveguide and bath system.
//!
//! Energies and rates are expressed in natural units (ħ = k_B = 1). In the
//! dimensionless mode every quantity is measured in units of the ZZ coupling
//! `J`, so `coupling = 1`.

use crate::error::{Error, Result};

/// Ratio `J / min(ω₁, ω₂)` above which the weak-coupling master equation is
/// no longer trusted.
pub const WEAK_COUPLING_RATIO: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Transition frequency of the probe atom (atom 1), coupled to the bath.
    pub omega1: f64,
    /// Transition frequency of the waveguide atom (atom 2).
    pub omega2: f64,
    /// ZZ coupling; the Hamiltonian term is `(J/2) σ₁ᶻ σ₂ᶻ`.
    pub coupling: f64,
    /// Waveguide decay rate `γ = π g²`.
    pub gamma: f64,
    /// Ohmic bath prefactor, spectral function `𝒥(ω₁) = κ ω₁`.
    pub kappa: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamWarning {
    /// `J` is not small compared with the atomic frequencies.
    StrongCoupling { ratio: f64 },
}

impl std::fmt::Display for ParamWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamWarning::StrongCoupling { ratio } => write!(
                f,
                "J / min(omega1, omega2) = {ratio:.3} >= {WEAK_COUPLING_RATIO}: \
                 outside the weak-coupling regime of the master equation"
            ),
        }
    }
}

impl Default for ModelParams {
    /// `ω₁ = ω₂ = 100 J`, `κ ω₁ = 0.1 J`, `γ = 0.5 J`.
    fn default() -> Self {
        ModelParams {
            omega1: 100.0,
            omega2: 100.0,
            coupling: 1.0,
            gamma: 0.5,
            kappa: 1e-3,
        }
    }
}

impl ModelParams {
    pub fn new(omega1: f64, omega2: f64, coupling: f64, gamma: f64, kappa: f64) -> Result<Self> {
        let p = ModelParams {
            omega1,
            omega2,
            coupling,
            gamma,
            kappa,
        };
        p.validate()?;
        Ok(p)
    }

    /// Default configuration in units of `J` with the given waveguide decay rate.
    pub fn dimensionless(gamma: f64) -> Result<Self> {
        let p = ModelParams {
            gamma,
            ..ModelParams::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_gamma(self, gamma: f64) -> Result<Self> {
        let p = ModelParams { gamma, ..self };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        fn positive(field: &'static str, v: f64) -> Result<()> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::config(field, format!("must be finite and > 0, got {v}")))
            }
        }
        positive("omega1", self.omega1)?;
        positive("omega2", self.omega2)?;
        positive("gamma", self.gamma)?;
        if !self.coupling.is_finite() {
            return Err(Error::config("coupling", "must be finite"));
        }
        if !(self.kappa.is_finite() && self.kappa >= 0.0) {
            return Err(Error::config(
                "kappa",
                format!("must be finite and >= 0, got {}", self.kappa),
            ));
        }
        Ok(())
    }

    /// Soft checks that do not invalidate the parameters.
    pub fn warnings(&self) -> Vec<ParamWarning> {
        let ratio = self.coupling.abs() / self.omega1.min(self.omega2);
        if ratio >= WEAK_COUPLING_RATIO {
            vec![ParamWarning::StrongCoupling { ratio }]
        } else {
            Vec::new()
        }
    }

    /// `𝒥(ω₁) = κ ω₁`, the bath rate entering both dissipators.
    pub fn bath_rate(&self) -> f64 {
        self.kappa * self.omega1
    }

    /// `Γ = γ / J`.
    pub fn reduced_gamma(&self) -> f64 {
        self.gamma / self.coupling
    }

    /// `x₀ = −Δ / J` for a detuning `Δ = ω₂ − ω`.
    pub fn reduced_detuning(&self, delta: f64) -> f64 {
        -delta / self.coupling
    }
}
