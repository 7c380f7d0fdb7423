use std::fmt;
use std::str::FromStr;

use fdu_math::{Error, Result};
use fdu_rates::{Acceleration, Energy, FrameSpec, Geometry, Length, Scenario};

/// A scalar rate input that can be swept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Omega0,
    Lambda,
    Alpha,
    Temperature,
    L,
    Z0,
    D,
    Theta,
}

impl Param {
    pub const ALL: [Param; 8] =
        [Param::Omega0, Param::Lambda, Param::Alpha, Param::Temperature, Param::L, Param::Z0, Param::D, Param::Theta];

    pub fn name(self) -> &'static str {
        match self {
            Param::Omega0 => "omega0",
            Param::Lambda => "lambda",
            Param::Alpha => "alpha",
            Param::Temperature => "T",
            Param::L => "L",
            Param::Z0 => "z0",
            Param::D => "d",
            Param::Theta => "theta",
        }
    }

    /// Current value in `s`, or `None` if `s` has no such input.
    pub fn get(self, s: &Scenario) -> Option<f64> {
        match self {
            Param::Omega0 => Some(s.atom.omega0.0),
            Param::Lambda => Some(s.atom.lambda),
            Param::Alpha => Some(s.frame.alpha().0),
            Param::Temperature => match s.frame {
                FrameSpec::Coaccelerated { temperature, .. } => Some(temperature.0),
                FrameSpec::Inertial { .. } => None,
            },
            Param::L => match s.geometry {
                Geometry::Cavity { length, .. } => Some(length.0),
                _ => None,
            },
            Param::Z0 => match s.geometry {
                Geometry::Cavity { z0, .. } | Geometry::SingleBoundary { z0 } => Some(z0.0),
                Geometry::FreeSpace => None,
            },
            Param::D => s.pair.map(|p| p.d.0),
            Param::Theta => s.pair.map(|p| p.theta),
        }
    }

    pub fn is_input_of(self, s: &Scenario) -> bool {
        self.get(s).is_some()
    }

    /// Copy of `s` with this input set to `v`; unchanged if `s` has no
    /// such input.
    pub fn apply(self, s: &Scenario, v: f64) -> Scenario {
        let mut s = *s;
        match self {
            Param::Omega0 => s.atom.omega0 = Energy(v),
            Param::Lambda => s.atom.lambda = v,
            Param::Alpha => match &mut s.frame {
                FrameSpec::Inertial { alpha } | FrameSpec::Coaccelerated { alpha, .. } => *alpha = Acceleration(v),
            },
            Param::Temperature => {
                if let FrameSpec::Coaccelerated { temperature, .. } = &mut s.frame {
                    *temperature = Energy(v);
                }
            }
            Param::L => {
                if let Geometry::Cavity { length, .. } = &mut s.geometry {
                    *length = Length(v);
                }
            }
            Param::Z0 => match &mut s.geometry {
                Geometry::Cavity { z0, .. } | Geometry::SingleBoundary { z0 } => *z0 = Length(v),
                Geometry::FreeSpace => {}
            },
            Param::D => {
                if let Some(p) = &mut s.pair {
                    p.d = Length(v);
                }
            }
            Param::Theta => {
                if let Some(p) = &mut s.pair {
                    p.theta = v;
                }
            }
        }
        s
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown parameter '{s}'")))
    }
}
