use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration value violates its invariant.
    #[error("invalid {field}: {reason}")]
    InvalidConfig { field: &'static str, reason: String },

    /// Time integration drifted off the trace-one manifold.
    #[error("integration unstable at t = {time}: trace drift {drift:e} exceeds limit with dt = {dt}")]
    Integration { dt: f64, time: f64, drift: f64 },

    /// Adaptive quadrature hit its panel cap before meeting the tolerance.
    #[error("quadrature did not converge: error estimate {estimate:e} after {panels} panels")]
    Quadrature { estimate: f64, panels: usize },

    /// A sweep point failed; carries the temperature at which it happened.
    #[error("at theta = {theta}: {source}")]
    AtTemperature {
        theta: f64,
        #[source]
        source: Box<Error>,
    },

    /// The measured value cannot be produced by the forward model.
    #[error("no solution: measured {measured} outside attainable range [{min}, {max}]")]
    NoSolution { measured: f64, min: f64, max: f64 },

    /// Measurements at different carriers share no common temperature.
    #[error("inconsistent measurements: no temperature is common to every estimate")]
    Inconsistent,

    /// More than one temperature survives disambiguation.
    #[error("still ambiguous: {} common candidates {candidates:?}; add a measurement at another carrier frequency", candidates.len())]
    Ambiguous { candidates: Vec<f64> },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidConfig {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn at_theta(self, theta: f64) -> Self {
        Error::AtTemperature {
            theta,
            source: Box::new(self),
        }
    }

    /// The innermost error, stripping sweep-position context.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::AtTemperature { source, .. } => source.root_cause(),
            other => other,
        }
    }
}
