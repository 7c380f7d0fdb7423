use crate::error::{Error, Result};

/// An energy in natural units: a level gap ω₀, a transition energy ΔE or a
/// bath temperature T.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Energy(pub f64);

/// A proper acceleration α in natural units.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Acceleration(pub f64);

/// A length in natural units (cavity length, atom-boundary distance,
/// interatomic distance).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Length(pub f64);

pub(crate) fn finite(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::invalid(format!("{name} must be finite (got {v})")))
    }
}

pub(crate) fn positive(name: &str, v: f64) -> Result<f64> {
    finite(name, v)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(Error::invalid(format!("{name} must be > 0 (got {v})")))
    }
}

impl Energy {
    pub fn positive(self, name: &str) -> Result<f64> {
        positive(name, self.0)
    }
}

impl Acceleration {
    pub fn positive(self, name: &str) -> Result<f64> {
        positive(name, self.0)
    }
}

impl Length {
    pub fn positive(self, name: &str) -> Result<f64> {
        positive(name, self.0)
    }
}
