use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wgtherm_cli::{exit, CliError, Command, RunConfig, Settings};

/// Single-photon transport in a waveguide with a thermally coupled probe
/// atom, and temperature estimation from the reflection.
///
/// All energies are in units of the ZZ coupling J unless a flag ends in
/// `-kelvin` or `-hz`. Output is CSV; `#` lines echo the resolved settings.
#[derive(Parser, Debug)]
#[command(name = "wgtherm", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Reflection and transmission against the detuning at fixed theta.
    Spectrum(Common),
    /// Monochromatic reflection against the bath temperature.
    ThermalSweep(Common),
    /// Lorentzian-pulse reflection against the bath temperature.
    PulseSweep(Common),
    /// Master-equation trajectory while the probe equilibrates.
    Evolve(Common),
    /// Closed-form steady state at theta.
    SteadyState(Common),
    /// Estimate theta from DELTA:R reflection readings.
    EstimateTemp(Common),
    /// Temperature scales for a physical omega1.
    Units(Common),
}

#[derive(Args, Debug, Default)]
struct Common {
    /// `key = value` file; flags override it.
    #[arg(long, short = 'c')]
    config: Option<PathBuf>,
    /// Output CSV path (stdout when absent).
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    /// Any configuration key, e.g. `--set quad_abs_tol=1e-10`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,

    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    coupling: Option<String>,
    #[arg(long)]
    omega1: Option<String>,
    #[arg(long)]
    omega2: Option<String>,
    #[arg(long)]
    kappa: Option<String>,
    #[arg(long)]
    omega1_hz: Option<String>,
    #[arg(long)]
    theta: Option<String>,
    #[arg(long)]
    theta_kelvin: Option<String>,
    /// Carrier or photon detuning omega2 - omega.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Pulse half-width; defaults to gamma / eta-ratio.
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    eta_ratio: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    grid_min: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    grid_max: Option<String>,
    #[arg(long)]
    grid_min_kelvin: Option<String>,
    #[arg(long)]
    grid_max_kelvin: Option<String>,
    #[arg(long)]
    grid_count: Option<String>,
    /// linear | log
    #[arg(long)]
    grid_scale: Option<String>,
    #[arg(long)]
    dt: Option<String>,
    #[arg(long)]
    t_max: Option<String>,
    #[arg(long)]
    steady_tol: Option<String>,
    /// gg | ge | eg | ee
    #[arg(long)]
    initial: Option<String>,
    /// Also time the approach to the steady state.
    #[arg(long)]
    equilibration_check: bool,
    /// A reading `DELTA:R`; repeat for several carriers.
    #[arg(long = "measure", value_name = "DELTA:R", allow_hyphen_values = true)]
    measure: Vec<String>,
    /// Invert the monochromatic formula instead of the pulse curve.
    #[arg(long)]
    monochromatic: bool,
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long)]
    merge_tol: Option<String>,
}

impl Common {
    fn settings(&self) -> Result<Settings, CliError> {
        let mut s = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
                Settings::parse(&text)?
            }
            None => Settings::default(),
        };
        let mut flags = Settings::default();
        let named = [
            ("gamma", &self.gamma),
            ("coupling", &self.coupling),
            ("omega1", &self.omega1),
            ("omega2", &self.omega2),
            ("kappa", &self.kappa),
            ("omega1_hz", &self.omega1_hz),
            ("theta", &self.theta),
            ("theta_kelvin", &self.theta_kelvin),
            ("delta", &self.delta),
            ("eta", &self.eta),
            ("eta_ratio", &self.eta_ratio),
            ("grid_min", &self.grid_min),
            ("grid_max", &self.grid_max),
            ("grid_min_kelvin", &self.grid_min_kelvin),
            ("grid_max_kelvin", &self.grid_max_kelvin),
            ("grid_count", &self.grid_count),
            ("grid_scale", &self.grid_scale),
            ("dt", &self.dt),
            ("t_max", &self.t_max),
            ("steady_tol", &self.steady_tol),
            ("initial", &self.initial),
            ("sigma", &self.sigma),
            ("merge_tol", &self.merge_tol),
        ];
        for pair in &self.set {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("--set expects KEY=VALUE, got {pair:?}")))?;
            flags.set(k, vec![v.trim().to_string()])?;
        }
        for (key, value) in named {
            if let Some(v) = value {
                flags.set(key, vec![v.clone()])?;
            }
        }
        if let Some(path) = &self.output {
            flags.set("output", vec![path.display().to_string()])?;
        }
        if self.equilibration_check {
            flags.set("equilibration_check", vec!["true".to_string()])?;
        }
        if self.monochromatic {
            flags.set("monochromatic", vec!["true".to_string()])?;
        }
        if !self.measure.is_empty() {
            flags.set("measurement", self.measure.clone())?;
        }
        s.overlay(flags);
        Ok(s)
    }
}

fn execute(command: Command, common: &Common) -> Result<(), CliError> {
    let cfg = RunConfig::resolve(command, &common.settings()?)?;
    for w in cfg.params.warnings() {
        eprintln!("warning: {w}");
    }
    match &cfg.output {
        Some(path) => {
            let file = File::create(path)?;
            let mut out = BufWriter::new(file);
            wgtherm_cli::run(&cfg, &mut out)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            wgtherm_cli::run(&cfg, &mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match &cli.command {
        Sub::Spectrum(c) => (Command::Spectrum, c),
        Sub::ThermalSweep(c) => (Command::ThermalSweep, c),
        Sub::PulseSweep(c) => (Command::PulseSweep, c),
        Sub::Evolve(c) => (Command::Evolve, c),
        Sub::SteadyState(c) => (Command::SteadyState, c),
        Sub::EstimateTemp(c) => (Command::EstimateTemp, c),
        Sub::Units(c) => (Command::Units, c),
    };
    match execute(command, common) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
