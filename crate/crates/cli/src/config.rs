//! Run configuration: `key = value` files, flag overrides and resolution into
//! typed settings with every default filled in.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use wgtherm_core::lindblad::{EE, EG, GE, GG};
use wgtherm_core::{units, EvolutionConfig, GridSpec, InversionConfig, ModelParams, QuadratureConfig, Scale};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    ThermalSweep,
    PulseSweep,
    Evolve,
    SteadyState,
    EstimateTemp,
    Units,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::ThermalSweep => "thermal-sweep",
            Command::PulseSweep => "pulse-sweep",
            Command::Evolve => "evolve",
            Command::SteadyState => "steady-state",
            Command::EstimateTemp => "estimate-temp",
            Command::Units => "units",
        }
    }

    /// `(min, max, count, scale)` of the default grid.
    fn default_grid(self) -> (f64, f64, usize, Scale) {
        match self {
            Command::Spectrum => (-3.0, 3.0, 601, Scale::Linear),
            _ => (1e-2, 1e2, 401, Scale::Log),
        }
    }

    /// Figure-caption defaults: γ = 0.5 for the spectrum, 0.1 for the
    /// temperature sweeps and the thermometer.
    fn default_gamma(self) -> f64 {
        match self {
            Command::Spectrum | Command::Evolve | Command::SteadyState | Command::Units => 0.5,
            Command::ThermalSweep | Command::PulseSweep | Command::EstimateTemp => 0.1,
        }
    }

    fn default_delta(self) -> f64 {
        match self {
            Command::ThermalSweep => 0.1,
            _ => 1.0,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const KEYS: &[&str] = &[
    "command",
    "omega1",
    "omega2",
    "coupling",
    "gamma",
    "kappa",
    "omega1_hz",
    "theta",
    "theta_kelvin",
    "delta",
    "eta",
    "eta_ratio",
    "grid_min",
    "grid_max",
    "grid_min_kelvin",
    "grid_max_kelvin",
    "grid_count",
    "grid_scale",
    "quad_window",
    "quad_abs_tol",
    "quad_max_subdivisions",
    "dt",
    "t_max",
    "steady_tol",
    "record_every",
    "stop_at_steady",
    "initial",
    "equilibration_check",
    "measurement",
    "monochromatic",
    "sigma",
    "merge_tol",
    "search_theta_min",
    "search_theta_max",
    "search_points",
    "search_quad_abs_tol",
    "output",
];

/// Raw `key → values` settings. Later sources replace whole entries, so a
/// flag overrides the file and repeated `measurement` flags replace the
/// file's list.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    entries: BTreeMap<String, Vec<String>>,
}

impl Settings {
    /// Parses one `key = value` per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!(
                    "line {}: expected `key = value`, got {raw:?}",
                    lineno + 1
                ))
            })?;
            let key = normalize_key(key);
            check_key(&key)?;
            entries.entry(key).or_default().push(value.trim().to_string());
        }
        Ok(Settings { entries })
    }

    pub fn set(&mut self, key: &str, values: Vec<String>) -> Result<(), CliError> {
        let key = normalize_key(key);
        check_key(&key)?;
        self.entries.insert(key, values);
        Ok(())
    }

    /// Applies `other` on top of `self`.
    pub fn overlay(&mut self, other: Settings) {
        self.entries.extend(other.entries);
    }

    fn one(&self, key: &str) -> Result<Option<&str>, CliError> {
        match self.entries.get(key).map(Vec::as_slice) {
            None | Some([]) => Ok(None),
            Some([v]) => Ok(Some(v)),
            Some(_) => Err(CliError::Config(format!("{key}: given more than once"))),
        }
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.one(key)?
            .map(|v| {
                v.parse::<T>()
                    .map_err(|_| CliError::Config(format!("{key}: cannot parse {v:?}")))
            })
            .transpose()
    }

    fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    fn all(&self, key: &str) -> &[String] {
        self.entries.get(key).map(Vec::as_slice).unwrap_or(&[])
    }
}

fn normalize_key(key: &str) -> String {
    key.trim().replace('-', "_")
}

fn check_key(key: &str) -> Result<(), CliError> {
    if KEYS.contains(&key) {
        Ok(())
    } else {
        Err(CliError::Config(format!("unknown key {key:?}")))
    }
}

/// One reflection reading taken at carrier detuning `delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    pub delta: f64,
    pub reflection: f64,
}

impl FromStr for Measurement {
    type Err = CliError;

    /// `DELTA:R`, e.g. `0.5:0.2134`.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Config(format!("measurement: expected DELTA:R, got {s:?}"));
        let (d, r) = s.split_once(':').ok_or_else(bad)?;
        Ok(Measurement {
            delta: d.trim().parse().map_err(|_| bad())?,
            reflection: r.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub params: ModelParams,
    pub omega1_hz: Option<f64>,
    pub theta: f64,
    pub delta: f64,
    pub eta: f64,
    pub grid: GridSpec,
    pub quad: QuadratureConfig,
    pub evolution: EvolutionConfig,
    /// Basis index of the initial state for `evolve`.
    pub initial: usize,
    pub equilibration_check: bool,
    pub measurements: Vec<Measurement>,
    pub monochromatic: bool,
    pub merge_tol: f64,
    pub inversion: InversionConfig,
    pub output: Option<PathBuf>,
}

fn initial_index(label: &str) -> Result<usize, CliError> {
    match label {
        "gg" => Ok(GG),
        "ge" => Ok(GE),
        "eg" => Ok(EG),
        "ee" => Ok(EE),
        other => Err(CliError::Config(format!(
            "initial: expected gg|ge|eg|ee, got {other:?}"
        ))),
    }
}

impl RunConfig {
    pub fn resolve(command: Command, s: &Settings) -> Result<Self, CliError> {
        if let Some(named) = s.one("command")? {
            if named != command.name() {
                return Err(CliError::Config(format!(
                    "command: file is for {named:?}, running {command}"
                )));
            }
        }
        let gamma = s.get_or("gamma", command.default_gamma())?;
        let base = ModelParams::default();
        let params = ModelParams::new(
            s.get_or("omega1", base.omega1)?,
            s.get_or("omega2", base.omega2)?,
            s.get_or("coupling", base.coupling)?,
            gamma,
            s.get_or("kappa", base.kappa)?,
        )?;
        let omega1_hz: Option<f64> = match s.one("omega1_hz")? {
            None | Some("none") => None,
            Some(_) => s.get("omega1_hz")?,
        };
        let kelvin_scale = || -> Result<f64, CliError> {
            let hz = omega1_hz.ok_or_else(|| CliError::Config("kelvin inputs need omega1_hz".to_string()))?;
            Ok(units::temperature_scale(units::angular_from_hz(hz))?)
        };
        if let Some(hz) = omega1_hz {
            if !(hz.is_finite() && hz > 0.0) {
                return Err(CliError::Config(format!("omega1_hz: must be > 0, got {hz}")));
            }
        }

        let theta = match (s.get::<f64>("theta")?, s.get::<f64>("theta_kelvin")?) {
            (Some(_), Some(_)) => {
                return Err(CliError::Config(
                    "give either theta or theta_kelvin, not both".to_string(),
                ))
            }
            (Some(t), None) => t,
            (None, Some(k)) => k / kelvin_scale()?,
            (None, None) => 1.0,
        };
        if !(theta.is_finite() && theta >= 0.0) {
            return Err(CliError::Config(format!("theta: must be >= 0, got {theta}")));
        }

        let delta = s.get_or("delta", command.default_delta())?;
        let eta = match (s.get::<f64>("eta")?, s.get::<f64>("eta_ratio")?) {
            (Some(_), Some(_)) => {
                return Err(CliError::Config(
                    "give either eta or eta_ratio, not both".to_string(),
                ))
            }
            (Some(e), None) => e,
            (None, ratio) => gamma / ratio.unwrap_or(20.0),
        };
        if !(eta.is_finite() && eta > 0.0) {
            return Err(CliError::Config(format!("eta: must be > 0, got {eta}")));
        }

        let (gmin, gmax, gcount, gscale) = command.default_grid();
        let bound = |plain: &str, kelvin: &str, default: f64| -> Result<f64, CliError> {
            match (s.get::<f64>(plain)?, s.get::<f64>(kelvin)?) {
                (Some(_), Some(_)) => Err(CliError::Config(format!(
                    "give either {plain} or {kelvin}, not both"
                ))),
                (Some(v), None) => Ok(v),
                (None, Some(k)) => Ok(k / kelvin_scale()?),
                (None, None) => Ok(default),
            }
        };
        let grid = GridSpec::new(
            bound("grid_min", "grid_min_kelvin", gmin)?,
            bound("grid_max", "grid_max_kelvin", gmax)?,
            s.get_or("grid_count", gcount)?,
            s.get_or("grid_scale", gscale)?,
        )?;

        let qd = QuadratureConfig::default();
        let quad = QuadratureConfig {
            window: s.get_or("quad_window", qd.window)?,
            abs_tol: s.get_or("quad_abs_tol", qd.abs_tol)?,
            max_subdivisions: s.get_or("quad_max_subdivisions", qd.max_subdivisions)?,
        };
        quad.validate()?;

        let ed = EvolutionConfig::default();
        let mut evolution = EvolutionConfig {
            dt: s.get("dt")?,
            t_max: s.get_or("t_max", ed.t_max)?,
            steady_tol: s.get_or("steady_tol", ed.steady_tol)?,
            record_every: s.get_or("record_every", ed.record_every)?,
            stop_at_steady: s.get_or("stop_at_steady", ed.stop_at_steady)?,
        };
        evolution.validate()?;
        // materialize the step so the echoed config is complete
        evolution.dt = Some(evolution.resolved_dt(&params, theta)?);

        let initial = initial_index(s.one("initial")?.unwrap_or("gg"))?;
        let measurements = s
            .all("measurement")
            .iter()
            .map(|m| m.parse())
            .collect::<Result<Vec<Measurement>, _>>()?;
        if command == Command::EstimateTemp && measurements.is_empty() {
            return Err(CliError::Config(
                "measurement: at least one DELTA:R reading is required".to_string(),
            ));
        }

        let id = InversionConfig::default();
        let inversion = InversionConfig {
            theta_min: s.get_or("search_theta_min", id.theta_min)?,
            theta_max: s.get_or("search_theta_max", id.theta_max)?,
            grid_points: s.get_or("search_points", id.grid_points)?,
            sigma: s.get_or("sigma", id.sigma)?,
            quad: QuadratureConfig {
                abs_tol: s.get_or("search_quad_abs_tol", id.quad.abs_tol)?,
                ..quad
            },
        };
        inversion.validate()?;
        let merge_tol = s.get_or("merge_tol", wgtherm_core::thermometry::DEFAULT_MERGE_TOL)?;
        if !(merge_tol.is_finite() && merge_tol >= 0.0) {
            return Err(CliError::Config(format!(
                "merge_tol: must be >= 0, got {merge_tol}"
            )));
        }

        Ok(RunConfig {
            command,
            params,
            omega1_hz,
            theta,
            delta,
            eta,
            grid,
            quad,
            evolution,
            initial,
            equilibration_check: s.get_or("equilibration_check", false)?,
            measurements,
            monochromatic: s.get_or("monochromatic", false)?,
            merge_tol,
            inversion,
            output: s.one("output")?.map(PathBuf::from),
        })
    }

    /// Every resolved setting as `(key, value)`, in a fixed order.
    pub fn metadata(&self) -> Vec<(&'static str, String)> {
        let p = &self.params;
        let mut out = vec![
            ("command", self.command.to_string()),
            ("omega1", num(p.omega1)),
            ("omega2", num(p.omega2)),
            ("coupling", num(p.coupling)),
            ("gamma", num(p.gamma)),
            ("kappa", num(p.kappa)),
            (
                "omega1_hz",
                self.omega1_hz.map_or_else(|| "none".to_string(), num),
            ),
            ("theta", num(self.theta)),
            ("delta", num(self.delta)),
            ("eta", num(self.eta)),
            ("grid_min", num(self.grid.min)),
            ("grid_max", num(self.grid.max)),
            ("grid_count", self.grid.count.to_string()),
            ("grid_scale", self.grid.scale.to_string()),
            ("quad_window", num(self.quad.window)),
            ("quad_abs_tol", num(self.quad.abs_tol)),
            ("quad_max_subdivisions", self.quad.max_subdivisions.to_string()),
            ("dt", num(self.evolution.dt.unwrap_or(f64::NAN))),
            ("t_max", num(self.evolution.t_max)),
            ("steady_tol", num(self.evolution.steady_tol)),
            ("record_every", self.evolution.record_every.to_string()),
            ("stop_at_steady", self.evolution.stop_at_steady.to_string()),
            (
                "initial",
                wgtherm_core::lindblad::BASIS_LABELS[self.initial].to_string(),
            ),
            ("equilibration_check", self.equilibration_check.to_string()),
            ("monochromatic", self.monochromatic.to_string()),
            ("sigma", num(self.inversion.sigma)),
            ("merge_tol", num(self.merge_tol)),
            ("search_theta_min", num(self.inversion.theta_min)),
            ("search_theta_max", num(self.inversion.theta_max)),
            ("search_points", self.inversion.grid_points.to_string()),
            ("search_quad_abs_tol", num(self.inversion.quad.abs_tol)),
        ];
        for m in &self.measurements {
            out.push(("measurement", format!("{}:{}", num(m.delta), num(m.reflection))));
        }
        out
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}
