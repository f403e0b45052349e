//! Front end for the waveguide thermometer: configuration handling, CSV
//! sweeps that reproduce the transport figures, and temperature estimation.

pub mod commands;
pub mod config;
pub mod error;

pub use commands::run;
pub use config::{Command, Measurement, RunConfig, Settings};
pub use error::{exit, CliError};
