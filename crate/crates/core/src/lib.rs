//! Temperature-dependent single-photon transport in a waveguide coupled to a
//! two-level atom whose ZZ-coupled partner sits in a thermal bath, and the
//! inverse problem of reading the bath temperature off the reflection.
//!
//! * [`thermal`] and [`units`]: bath occupation, `⟨σ₁ᶻ⟩`, steady populations,
//!   effective temperature and SI conversions.
//! * [`lindblad`]: the two-atom master equation and its steady state.
//! * [`scattering`]: monochromatic transmission and reflection amplitudes.
//! * [`pulse`]: reflection averaged over a Lorentzian pulse spectrum.
//! * [`thermometry`]: inversion of readings into candidate temperatures and
//!   dual-carrier disambiguation.

pub mod error;
pub mod grid;
pub mod lindblad;
pub mod params;
pub mod pulse;
pub mod quad;
pub mod roots;
pub mod scattering;
pub mod thermal;
pub mod thermometry;
pub mod units;

pub use error::{Error, Result};
pub use grid::{GridSpec, Scale};
pub use lindblad::{DensityMatrix, EvolutionConfig, Trajectory};
pub use params::{ModelParams, ParamWarning};
pub use pulse::{PulseReflection, PulseSpec, QuadratureConfig};
pub use scattering::{ScatteringInput, ScatteringResult};
pub use thermal::ThermalPoint;
pub use thermometry::{Branch, Candidate, InversionConfig, TemperatureEstimate};
