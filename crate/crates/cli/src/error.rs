use thiserror::Error;
use wgtherm_core::Error as CoreError;

pub mod exit {
    pub const OK: u8 = 0;
    pub const IO: u8 = 1;
    pub const CONFIG: u8 = 2;
    pub const NUMERICAL: u8 = 3;
    pub const AMBIGUOUS: u8 = 4;
    pub const NO_SOLUTION: u8 = 5;
    pub const INCONSISTENT: u8 = 6;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => exit::CONFIG,
            CliError::Io(_) | CliError::Csv(_) => exit::IO,
            CliError::Core(e) => match e.root_cause() {
                CoreError::Domain(_) | CoreError::InvalidConfig { .. } => exit::CONFIG,
                CoreError::Integration { .. } | CoreError::Quadrature { .. } => exit::NUMERICAL,
                CoreError::Ambiguous { .. } => exit::AMBIGUOUS,
                CoreError::NoSolution { .. } => exit::NO_SOLUTION,
                CoreError::Inconsistent => exit::INCONSISTENT,
                CoreError::AtTemperature { .. } => exit::NUMERICAL,
            },
        }
    }
}
