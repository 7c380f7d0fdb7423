//! Conversion between SI laboratory parameters and the natural units
//! (ħ = c = k_B = 1) used by the rate formulas, plus worked estimates for a
//! rubidium-scale atom in a 100 nm cavity.
//!
//! Natural quantities are expressed with the electronvolt as the energy
//! unit: energies and accelerations in eV, lengths in eV⁻¹.

mod constants;
mod estimate;

pub use constants::PhysicalConstants;
pub use estimate::{estimate_rate, estimate_rb87, EstimateReport, Rb87Variant};

use fdu_math::{Error, Result};
use fdu_rates::{Acceleration, AtomSpec, Direction, FrameSpec, Geometry, Length, PairConfig, Scenario};

/// Laboratory description of an atom (or pair) accelerated between two
/// mirrors, in SI units except for the gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SIScenario {
    /// Mirror separation in metres.
    pub cavity_length: f64,
    /// Distance from the nearer mirror to the (first) atom, in metres.
    pub atom_boundary_distance: f64,
    /// Separation of the two atoms in metres, for a pair.
    pub interatomic_distance: Option<f64>,
    /// Proper acceleration in m/s².
    pub acceleration: f64,
    /// Transition energy in eV.
    pub gap: f64,
    pub lambda: f64,
    /// Entanglement angle of the pair state, in radians.
    pub theta: Option<f64>,
}

impl SIScenario {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(format!("{name} must be > 0 (got {v})")))
            }
        };
        positive("cavity_length", self.cavity_length)?;
        positive("atom_boundary_distance", self.atom_boundary_distance)?;
        positive("acceleration", self.acceleration)?;
        positive("gap", self.gap)?;
        positive("lambda", self.lambda)?;
        if let Some(d) = self.interatomic_distance {
            positive("interatomic_distance", d)?;
        }
        if self.interatomic_distance.is_some() != self.theta.is_some() {
            return Err(Error::invalid("interatomic_distance and theta must be given together"));
        }
        Ok(())
    }
}

/// Rate inputs in natural units with eV as the energy unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaturalScenario {
    pub atom: AtomSpec,
    pub geometry: Geometry,
    pub frame: FrameSpec,
    pub pair: Option<PairConfig>,
}

impl NaturalScenario {
    /// Dimensionless ω₀L.
    pub fn omega0_l(&self) -> Option<f64> {
        match self.geometry {
            Geometry::Cavity { length, .. } => Some(self.atom.omega0.0 * length.0),
            _ => None,
        }
    }

    /// Dimensionless α/ω₀.
    pub fn alpha_over_omega0(&self) -> f64 {
        self.frame.alpha().0 / self.atom.omega0.0
    }

    pub fn scenario(&self, direction: Direction) -> Scenario {
        Scenario { atom: self.atom, geometry: self.geometry, frame: self.frame, pair: self.pair, direction }
    }
}

fn checked(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::invalid(format!("{name} overflows or underflows in conversion (got {v})")))
    }
}

/// Converts to natural units: ω₀ = gap, L → L/ħc, a → ħa/c.
pub fn to_natural(s: &SIScenario, k: &PhysicalConstants) -> Result<NaturalScenario> {
    s.validate()?;
    let hbar_c = k.hbar_c_ev_m();
    let length = checked("L", s.cavity_length / hbar_c)?;
    let z0 = checked("z0", s.atom_boundary_distance / hbar_c)?;
    let alpha = checked("alpha", k.hbar * s.acceleration / k.c / k.ev)?;
    let pair = match (s.interatomic_distance, s.theta) {
        (Some(d), Some(theta)) => Some(PairConfig { theta, d: Length(checked("d", d / hbar_c)?) }),
        _ => None,
    };
    let n = NaturalScenario {
        atom: AtomSpec::new(s.gap, s.lambda),
        geometry: Geometry::Cavity { length: Length(length), z0: Length(z0) },
        frame: FrameSpec::Inertial { alpha: Acceleration(alpha) },
        pair,
    };
    n.geometry.validate()?;
    if let Some(p) = &n.pair {
        p.validate(&n.geometry)?;
    }
    Ok(n)
}

/// Inverse of [`to_natural`]. Only cavity geometries have an SI form here.
pub fn from_natural(n: &NaturalScenario, k: &PhysicalConstants) -> Result<SIScenario> {
    let Geometry::Cavity { length, z0 } = n.geometry else {
        return Err(Error::invalid("only cavity scenarios convert to SIScenario"));
    };
    let hbar_c = k.hbar_c_ev_m();
    let alpha = n.frame.alpha().0;
    Ok(SIScenario {
        cavity_length: length.0 * hbar_c,
        atom_boundary_distance: z0.0 * hbar_c,
        interatomic_distance: n.pair.map(|p| p.d.0 * hbar_c),
        acceleration: alpha * k.ev * k.c / k.hbar,
        gap: n.atom.omega0.0,
        lambda: n.atom.lambda,
        theta: n.pair.map(|p| p.theta),
    })
}

/// Converts a rate in eV to s⁻¹.
pub fn ev_to_per_second(rate_ev: f64, k: &PhysicalConstants) -> f64 {
    rate_ev / k.hbar_ev_s()
}
