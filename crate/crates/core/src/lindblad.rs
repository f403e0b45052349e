//! Two-atom reduced dynamics while the probe atom equilibrates with the bath.
//!
//! The master equation is
//!
//! ```text
//! ρ̇ = −i[H_A, ρ] + 𝒥(ω₁)(n+1) D[σ₁^{ge}]ρ + 𝒥(ω₁) n D[σ₁^{eg}]ρ
//! D[L]ρ = L ρ L† − ½{L†L, ρ}
//! ```
//!
//! with `H_A = Σ (ω_m/2) σ_mᶻ + (J/2) σ₁ᶻ σ₂ᶻ`. The waveguide stays in vacuum
//! during this stage and does not enter.
//!
//! Basis order is `|g₁g₂⟩, |g₁e₂⟩, |e₁g₂⟩, |e₁e₂⟩` (atom 1 is the most
//! significant factor).

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::thermal;

pub type Operator = Matrix4<Complex64>;

pub const GG: usize = 0;
pub const GE: usize = 1;
pub const EG: usize = 2;
pub const EE: usize = 3;

pub const BASIS_LABELS: [&str; 4] = ["gg", "ge", "eg", "ee"];

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const EIGEN_TOL: f64 = 1e-10;

/// Trace drift beyond which a trajectory is declared unstable.
pub const MAX_TRACE_DRIFT: f64 = 1e-6;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Frobenius norm of a complex 4×4 operator.
pub fn frobenius(m: &Operator) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(Operator);

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(m: Operator) -> Result<Self> {
        let rho = DensityMatrix(m);
        let herm = rho.hermiticity_error();
        if herm > HERMITIAN_TOL {
            return Err(Error::domain(format!(
                "density matrix not Hermitian: ||rho - rho^dag||_F = {herm:e}"
            )));
        }
        let tr = rho.trace();
        if (tr - 1.0).norm() > TRACE_TOL {
            return Err(Error::domain(format!("density matrix trace {tr} != 1")));
        }
        let min_eig = rho.min_eigenvalue();
        if min_eig < -EIGEN_TOL {
            return Err(Error::domain(format!(
                "density matrix not positive: min eigenvalue {min_eig:e}"
            )));
        }
        Ok(rho)
    }

    pub(crate) fn new_unchecked(m: Operator) -> Self {
        DensityMatrix(m)
    }

    /// Diagonal state with the given populations in basis order.
    pub fn from_populations(p: [f64; 4]) -> Result<Self> {
        DensityMatrix::new(Operator::from_diagonal(&p.map(c).into()))
    }

    pub fn basis_state(index: usize) -> Self {
        let mut m = Operator::zeros();
        m[(index, index)] = c(1.0);
        DensityMatrix(m)
    }

    pub fn ground() -> Self {
        DensityMatrix::basis_state(GG)
    }

    pub fn matrix(&self) -> &Operator {
        &self.0
    }

    pub fn into_matrix(self) -> Operator {
        self.0
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn population(&self, index: usize) -> f64 {
        self.0[(index, index)].re
    }

    pub fn populations(&self) -> [f64; 4] {
        [GG, GE, EG, EE].map(|i| self.population(i))
    }

    /// `(p_g, p_e)` of atom 1 after tracing out atom 2.
    pub fn atom1_populations(&self) -> (f64, f64) {
        (
            self.population(GG) + self.population(GE),
            self.population(EG) + self.population(EE),
        )
    }

    pub fn hermiticity_error(&self) -> f64 {
        frobenius(&(self.0 - self.0.adjoint()))
    }

    pub fn min_eigenvalue(&self) -> f64 {
        // Hermitian part only; the anti-Hermitian residue is checked separately.
        let herm = (self.0 + self.0.adjoint()) * c(0.5);
        herm.symmetric_eigenvalues().min()
    }
}

/// Atomic Hamiltonian `H_A`, diagonal in the product basis.
pub fn hamiltonian(params: &ModelParams) -> Operator {
    let id = Matrix2::<Complex64>::identity();
    let sz = Matrix2::new(c(-1.0), c(0.0), c(0.0), c(1.0));
    let sz1 = sz.kronecker(&id);
    let sz2 = id.kronecker(&sz);
    sz1 * c(params.omega1 / 2.0) + sz2 * c(params.omega2 / 2.0) + sz1 * sz2 * c(params.coupling / 2.0)
}

/// `σ₁^{ge} = |g₁⟩⟨e₁| ⊗ 1`.
pub fn lowering_atom1() -> Operator {
    let id = Matrix2::<Complex64>::identity();
    let lower = Matrix2::new(c(0.0), c(1.0), c(0.0), c(0.0));
    lower.kronecker(&id)
}

/// The master-equation generator at fixed parameters and bath temperature.
///
/// `H_eff = H_A − (i/2) Σ_k γ_k L_k† L_k` is diagonal in the product basis,
/// and both jump operators move whole 2×2 blocks of atom 2, so `apply` works
/// elementwise instead of through dense products.
#[derive(Debug, Clone)]
pub struct Generator {
    effective: [Complex64; 4],
    decay: f64,
    excitation: f64,
}

impl Generator {
    pub fn new(params: &ModelParams, theta: f64) -> Result<Self> {
        params.validate()?;
        let n = thermal::occupation(theta)?;
        let rate = params.bath_rate();
        let decay = rate * (n + 1.0);
        let excitation = rate * n;
        let lower = lowering_atom1();
        let raise = lower.adjoint();
        let damping = (raise * lower) * c(decay) + (lower * raise) * c(excitation);
        let effective = hamiltonian(params) - damping * Complex64::new(0.0, 0.5);
        Ok(Generator {
            effective: std::array::from_fn(|i| effective[(i, i)]),
            decay,
            excitation,
        })
    }

    /// `(γ↓, γ↑) = (𝒥(ω₁)(n+1), 𝒥(ω₁) n)`.
    pub fn rates(&self) -> (f64, f64) {
        (self.decay, self.excitation)
    }

    /// `ρ̇` for a Hermitian `ρ`, written as `−i(H_eff ρ − (H_eff ρ)†)` plus
    /// the jump terms. This is exact for Hermitian `ρ` and keeps the result
    /// exactly Hermitian.
    pub fn apply(&self, rho: &Operator) -> Operator {
        let h = &self.effective;
        let mut out = Operator::from_fn(|i, j| {
            // −i(h_i − h_j*) ρ_ij
            let z = h[i] - h[j].conj();
            Complex64::new(z.im, -z.re) * rho[(i, j)]
        });
        // σ₁^{ge} ρ σ₁^{eg} moves the e₁ block onto g₁, σ₁^{eg} ρ σ₁^{ge} the reverse
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] += rho[(i + 2, j + 2)] * self.decay;
                out[(i + 2, j + 2)] += rho[(i, j)] * self.excitation;
            }
        }
        out
    }
}

/// Time derivative of `ρ` under the master equation.
pub fn lindblad_rhs(rho: &DensityMatrix, params: &ModelParams, theta: f64) -> Result<Operator> {
    Ok(Generator::new(params, theta)?.apply(rho.matrix()))
}

/// Closed-form steady state `diag((n+1)/(2n+1), 0, n/(2n+1), 0)`.
pub fn steady_state(params: &ModelParams, theta: f64) -> Result<DensityMatrix> {
    params.validate()?;
    let (p_gg, p_eg) = thermal::steady_populations(theta)?;
    let mut m = Operator::zeros();
    m[(GG, GG)] = c(p_gg);
    m[(EG, EG)] = c(p_eg);
    Ok(DensityMatrix(m))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionConfig {
    /// Step size in units of `1/J`; `None` picks `0.01 / max(ω₁, ω₂, γ↓, γ↑)`.
    pub dt: Option<f64>,
    pub t_max: f64,
    /// Threshold on `‖ρ̇‖_F` for declaring the steady state.
    pub steady_tol: f64,
    /// Keep every `record_every`-th step in the trajectory (the first and last
    /// points are always kept).
    pub record_every: usize,
    pub stop_at_steady: bool,
}

impl Default for EvolutionConfig {
    fn default() -> Self {
        EvolutionConfig {
            dt: None,
            t_max: 1000.0,
            steady_tol: 1e-12,
            record_every: 1000,
            stop_at_steady: true,
        }
    }
}

impl EvolutionConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(dt) = self.dt {
            if !(dt.is_finite() && dt > 0.0) {
                return Err(Error::config("dt", format!("must be > 0, got {dt}")));
            }
        }
        if !(self.t_max.is_finite() && self.t_max > 0.0) {
            return Err(Error::config("t_max", format!("must be > 0, got {}", self.t_max)));
        }
        if !(self.steady_tol.is_finite() && self.steady_tol > 0.0) {
            return Err(Error::config(
                "steady_tol",
                format!("must be > 0, got {}", self.steady_tol),
            ));
        }
        if self.record_every == 0 {
            return Err(Error::config("record_every", "must be >= 1"));
        }
        Ok(())
    }

    pub fn resolved_dt(&self, params: &ModelParams, theta: f64) -> Result<f64> {
        match self.dt {
            Some(dt) => Ok(dt),
            None => {
                let (down, up) = Generator::new(params, theta)?.rates();
                let fastest = params.omega1.max(params.omega2).max(down).max(up);
                Ok(0.01 / fastest)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub points: Vec<(f64, DensityMatrix)>,
    /// Time at which `‖ρ̇‖_F` first fell below the threshold.
    pub steady_at: Option<f64>,
    pub dt: f64,
    pub steps: usize,
}

impl Trajectory {
    pub fn last(&self) -> &(f64, DensityMatrix) {
        self.points
            .last()
            .expect("trajectory always holds the initial point")
    }

    pub fn is_steady(&self) -> bool {
        self.steady_at.is_some()
    }
}

/// Fixed-step classical RK4 integration of the master equation.
pub fn evolve(
    rho0: &DensityMatrix,
    params: &ModelParams,
    theta: f64,
    config: &EvolutionConfig,
) -> Result<Trajectory> {
    config.validate()?;
    let generator = Generator::new(params, theta)?;
    let dt = config.resolved_dt(params, theta)?;
    let half = c(0.5);
    let sixth = c(1.0 / 6.0);

    let mut rho = *rho0.matrix();
    let mut t = 0.0;
    let mut steps = 0usize;
    let mut points = vec![(0.0, rho0.clone())];
    let mut steady_at = None;

    loop {
        let k1 = generator.apply(&rho);
        if steady_at.is_none() && frobenius(&k1) < config.steady_tol {
            steady_at = Some(t);
            if config.stop_at_steady {
                break;
            }
        }
        if t >= config.t_max {
            break;
        }
        let h = dt.min(config.t_max - t);
        let hc = c(h);
        let k2 = generator.apply(&(rho + k1 * (hc * half)));
        let k3 = generator.apply(&(rho + k2 * (hc * half)));
        let k4 = generator.apply(&(rho + k3 * hc));
        rho += (k1 + (k2 + k3) * c(2.0) + k4) * (hc * sixth);
        steps += 1;
        t = if config.t_max - t <= dt {
            config.t_max
        } else {
            t + h
        };

        let drift = (rho.trace() - 1.0).norm();
        if drift.is_nan() || drift > MAX_TRACE_DRIFT {
            return Err(Error::Integration { dt, time: t, drift });
        }
        if steps.is_multiple_of(config.record_every) {
            points.push((t, DensityMatrix::new_unchecked(rho)));
        }
    }
    if points.last().map(|(tl, _)| *tl) != Some(t) {
        points.push((t, DensityMatrix::new_unchecked(rho)));
    }
    Ok(Trajectory {
        points,
        steady_at,
        dt,
        steps,
    })
}
