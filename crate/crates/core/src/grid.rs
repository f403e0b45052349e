use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Linear => "linear",
            Scale::Log => "log",
        })
    }
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" | "lin" => Ok(Scale::Linear),
            "log" | "geometric" => Ok(Scale::Log),
            other => Err(Error::config(
                "scale",
                format!("expected linear|log, got {other:?}"),
            )),
        }
    }
}

/// A one-dimensional sampling grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: Scale,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, count: usize, scale: Scale) -> Result<Self> {
        let g = GridSpec {
            min,
            max,
            count,
            scale,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::config("grid_count", "must be >= 1"));
        }
        if !self.min.is_finite() || !self.max.is_finite() {
            return Err(Error::config("grid_min", "grid bounds must be finite"));
        }
        if self.count > 1 && self.min >= self.max {
            return Err(Error::config(
                "grid_max",
                format!("must exceed grid_min ({} >= {})", self.min, self.max),
            ));
        }
        if self.scale == Scale::Log && self.min <= 0.0 {
            return Err(Error::config("grid_min", "log grid needs a positive minimum"));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        match self.scale {
            Scale::Linear => linspace(self.min, self.max, self.count),
            Scale::Log => logspace(self.min, self.max, self.count),
        }
    }
}

pub fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![min];
    }
    let step = (max - min) / (count - 1) as f64;
    (0..count)
        .map(|i| {
            if i + 1 == count {
                max
            } else {
                min + step * i as f64
            }
        })
        .collect()
}

pub fn logspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    let (a, b) = (min.ln(), max.ln());
    linspace(a, b, count)
        .into_iter()
        .enumerate()
        .map(|(i, l)| match i {
            0 => min,
            _ if i + 1 == count => max,
            _ => l.exp(),
        })
        .collect()
}
