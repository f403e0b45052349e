//! One function per subcommand. Each writes a CSV table preceded by `#`
//! lines echoing the resolved configuration.

use std::io::Write;

use wgtherm_core::lindblad::{self, DensityMatrix, BASIS_LABELS};
use wgtherm_core::pulse::{self, PulseSpec};
use wgtherm_core::scattering::{self, ScatteringInput};
use wgtherm_core::thermometry::{self, TemperatureEstimate};
use wgtherm_core::{thermal, units, Error as CoreError};

use crate::config::{num, Command, RunConfig};
use crate::error::CliError;

struct Table<W: Write> {
    csv: csv::Writer<W>,
    notes: Vec<(String, String)>,
}

impl<W: Write> Table<W> {
    fn new(mut out: W, cfg: &RunConfig, header: &[&str]) -> Result<Self, CliError> {
        writeln!(out, "# wgtherm {}", env!("CARGO_PKG_VERSION"))?;
        for (key, value) in cfg.metadata() {
            writeln!(out, "# {key} = {value}")?;
        }
        let mut csv = csv::Writer::from_writer(out);
        csv.write_record(header)?;
        Ok(Table {
            csv,
            notes: Vec::new(),
        })
    }

    fn row(&mut self, fields: &[String]) -> Result<(), CliError> {
        self.csv.write_record(fields)?;
        Ok(())
    }

    /// `# key = value` line written after the data.
    fn note(&mut self, key: &str, value: String) {
        self.notes.push((key.to_string(), value));
    }

    fn finish(self) -> Result<(), CliError> {
        let mut out = self.csv.into_inner().map_err(|e| e.into_error())?;
        for (key, value) in self.notes {
            writeln!(out, "# {key} = {value}")?;
        }
        out.flush()?;
        Ok(())
    }
}

fn delta_over_j(cfg: &RunConfig, delta: f64) -> f64 {
    let j = cfg.params.coupling;
    if j == 0.0 {
        delta
    } else {
        delta / j
    }
}

fn omega1(cfg: &RunConfig) -> Option<f64> {
    cfg.omega1_hz.map(units::angular_from_hz)
}

fn kelvin(cfg: &RunConfig, theta: f64) -> Result<Option<String>, CliError> {
    omega1(cfg)
        .map(|w| Ok(num(units::theta_to_kelvin(theta, w)?)))
        .transpose()
}

/// `theta[, T_kelvin]` followed by `rest`.
fn temperature_header<'a>(cfg: &RunConfig, rest: &[&'a str]) -> Vec<&'a str> {
    let mut h = vec!["theta"];
    if cfg.omega1_hz.is_some() {
        h.push("T_kelvin");
    }
    h.extend_from_slice(rest);
    h
}

fn temperature_fields(cfg: &RunConfig, theta: f64) -> Result<Vec<String>, CliError> {
    let mut f = vec![num(theta)];
    f.extend(kelvin(cfg, theta)?);
    Ok(f)
}

pub fn run(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    match cfg.command {
        Command::Spectrum => run_spectrum(cfg, out),
        Command::ThermalSweep => run_thermal_sweep(cfg, out),
        Command::PulseSweep => run_pulse_sweep(cfg, out),
        Command::Evolve => run_evolve(cfg, out),
        Command::SteadyState => run_steady_state(cfg, out),
        Command::EstimateTemp => run_estimate_temp(cfg, out),
        Command::Units => run_units(cfg, out),
    }
}

/// Reflection spectrum against the detuning at fixed temperature.
pub fn run_spectrum(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    let j = cfg.params.coupling;
    // with J = 0 the detuning is reported unscaled
    let first = if j == 0.0 { "delta" } else { "delta_over_J" };
    let mut table = Table::new(
        out,
        cfg,
        &[first, "T_prob", "R_prob", "re_t", "im_t", "re_r", "im_r"],
    )?;
    let x = thermal::sigma1z_thermal(cfg.theta)?;
    for delta in cfg.grid.points() {
        let input = ScatteringInput::new(delta, cfg.params.gamma, j, x)?;
        let a = scattering::amplitudes(&input);
        table.row(&[
            num(delta_over_j(cfg, delta)),
            num(a.transmission),
            num(a.reflection),
            num(a.t.re),
            num(a.t.im),
            num(a.r.re),
            num(a.r.im),
        ])?;
    }
    table.finish()
}

/// Monochromatic transport against the bath temperature.
pub fn run_thermal_sweep(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    let mut table = Table::new(out, cfg, &temperature_header(cfg, &["x", "T_prob", "R_prob"]))?;
    for theta in cfg.grid.points() {
        let input = ScatteringInput::from_params(&cfg.params, cfg.delta, theta).map_err(|e| {
            CoreError::AtTemperature {
                theta,
                source: Box::new(e),
            }
        })?;
        let a = scattering::amplitudes(&input);
        let mut f = temperature_fields(cfg, theta)?;
        f.extend([num(input.x), num(a.transmission), num(a.reflection)]);
        table.row(&f)?;
    }
    table.finish()
}

/// Lorentzian-pulse reflection against the bath temperature.
pub fn run_pulse_sweep(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    let pulse = PulseSpec::new(cfg.delta, cfg.eta)?;
    let sweep = pulse::pulse_reflection_sweep(&pulse, &cfg.params, &cfg.grid.points(), &cfg.quad)?;
    let mut table = Table::new(out, cfg, &temperature_header(cfg, &["R_pulse", "quad_error"]))?;
    for (theta, r) in sweep {
        let mut f = temperature_fields(cfg, theta)?;
        f.extend([num(r.value), num(r.error)]);
        table.row(&f)?;
    }
    table.finish()
}

/// Master-equation trajectory from a product basis state.
pub fn run_evolve(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    let rho0 = DensityMatrix::basis_state(cfg.initial);
    let traj = lindblad::evolve(&rho0, &cfg.params, cfg.theta, &cfg.evolution)?;

    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let mut header: Vec<String> = vec!["t".to_string()];
    header.extend(BASIS_LABELS.iter().map(|l| format!("p_{l}")));
    for &(i, j) in &pairs {
        let (a, b) = (BASIS_LABELS[i], BASIS_LABELS[j]);
        header.push(format!("re_rho_{a}_{b}"));
        header.push(format!("im_rho_{a}_{b}"));
    }
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut table = Table::new(out, cfg, &header)?;
    for (t, rho) in &traj.points {
        let mut f = vec![num(*t)];
        f.extend(rho.populations().iter().map(|&p| num(p)));
        for &(i, j) in &pairs {
            let z = rho.matrix()[(i, j)];
            f.push(num(z.re));
            f.push(num(z.im));
        }
        table.row(&f)?;
    }
    table.note("steps", traj.steps.to_string());
    table.note(
        "steady_at",
        traj.steady_at.map_or_else(|| "none".to_string(), num),
    );
    table.finish()
}

/// Closed-form steady state, optionally timing the approach to it.
pub fn run_steady_state(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    let theta = cfg.theta;
    let rho = lindblad::steady_state(&cfg.params, theta)?;
    let (g, e) = rho.atom1_populations();
    let theta_eff = thermal::effective_temperature(g, e)?;

    let mut rest = vec!["n", "x", "p_gg", "p_ge", "p_eg", "p_ee", "theta_eff"];
    if cfg.equilibration_check {
        rest.push("t_steady");
    }
    let mut table = Table::new(out, cfg, &temperature_header(cfg, &rest))?;
    let mut f = temperature_fields(cfg, theta)?;
    f.push(num(thermal::occupation(theta)?));
    f.push(num(thermal::sigma1z_thermal(theta)?));
    f.extend(rho.populations().iter().map(|&p| num(p)));
    f.push(num(theta_eff));
    if cfg.equilibration_check {
        let t = thermometry::equilibration_time(&cfg.params, theta, &cfg.evolution)?;
        f.push(num(t.unwrap_or(f64::NAN)));
    }
    table.row(&f)?;
    table.finish()
}

fn monochromatic_estimate(
    cfg: &RunConfig,
    delta: f64,
    reading: f64,
) -> Result<TemperatureEstimate, CliError> {
    let p = &cfg.params;
    if p.coupling == 0.0 {
        return Err(CliError::Config(
            "coupling: monochromatic inversion needs J != 0".to_string(),
        ));
    }
    let x0 = p.reduced_detuning(delta);
    let gamma = p.reduced_gamma();
    // attainable R over the physical range x ∈ [−1, 0]
    let nearest = x0.clamp(-1.0, 0.0);
    let farthest = if (x0 + 1.0).abs() > x0.abs() { -1.0 } else { 0.0 };
    let r = |x: f64| scattering::probabilities_dimensionless(x, x0, gamma).map(|(_, r)| r);
    let no_solution = || -> Result<CliError, CliError> {
        Ok(CoreError::NoSolution {
            measured: reading,
            min: r(farthest)?,
            max: r(nearest)?,
        }
        .into())
    };
    if reading == 0.0 {
        return Err(no_solution()?);
    }
    let e = thermometry::invert_monochromatic_with_sigma(reading, cfg.inversion.sigma, x0, gamma)?;
    if e.candidates.is_empty() {
        return Err(no_solution()?);
    }
    Ok(e)
}

/// Inverts each `DELTA:R` reading and, with two or more carriers, selects
/// the temperature they share. The table is written before any ambiguity or
/// inconsistency is reported.
pub fn run_estimate_temp(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    let mut estimates = Vec::with_capacity(cfg.measurements.len());
    for m in &cfg.measurements {
        let e = if cfg.monochromatic {
            monochromatic_estimate(cfg, m.delta, m.reflection)?
        } else {
            let pulse = PulseSpec::new(m.delta, cfg.eta)?;
            thermometry::invert_pulse(m.reflection, &pulse, &cfg.params, &cfg.inversion)?
        };
        estimates.push((m.delta, e));
    }

    let rest = ["theta_lo", "theta_hi", "residual", "sensitivity"];
    let mut header = vec!["delta_over_J", "R_meas", "branch", "theta"];
    if cfg.omega1_hz.is_some() {
        header.push("T_kelvin");
    }
    header.extend(rest);
    let mut table = Table::new(out, cfg, &header)?;
    for (delta, e) in &estimates {
        for c in &e.candidates {
            let mut f = vec![
                num(delta_over_j(cfg, *delta)),
                num(e.measured),
                c.branch.label().to_string(),
                num(c.theta),
            ];
            f.extend(kelvin(cfg, c.theta)?);
            f.extend([
                num(c.interval.0),
                num(c.interval.1),
                num(c.residual),
                num(c.sensitivity),
            ]);
            table.row(&f)?;
        }
    }

    let outcome = match estimates.as_slice() {
        [(_, only)] => match only.candidates.len() {
            1 => Ok(only.candidates[0].theta),
            _ => Err(CoreError::Ambiguous {
                candidates: only.thetas(),
            }),
        },
        _ => {
            let all: Vec<TemperatureEstimate> = estimates.into_iter().map(|(_, e)| e).collect();
            thermometry::disambiguate(&all, cfg.merge_tol).map(|e| e.selected.expect("unique"))
        }
    };
    match outcome {
        Ok(theta) => {
            table.note("selected_theta", num(theta));
            if let Some(k) = kelvin(cfg, theta)? {
                table.note("selected_T_kelvin", k);
            }
            table.finish()
        }
        Err(e) => {
            table.finish()?;
            Err(e.into())
        }
    }
}

/// Temperature scales at the configured `omega1_hz`.
pub fn run_units(cfg: &RunConfig, out: impl Write) -> Result<(), CliError> {
    let w = omega1(cfg).ok_or_else(|| CliError::Config("units: omega1_hz is required".to_string()))?;
    let mut table = Table::new(out, cfg, &["quantity", "value"])?;
    let rows = [
        ("omega1_rad_per_s", w),
        (
            "inverse_temperature_scale_per_kelvin",
            units::inverse_temperature_scale(w)?,
        ),
        ("temperature_scale_kelvin", units::temperature_scale(w)?),
        ("theta", cfg.theta),
        ("T_kelvin", units::theta_to_kelvin(cfg.theta, w)?),
    ];
    for (name, value) in rows {
        table.row(&[name.to_string(), num(value)])?;
    }
    table.finish()
}
