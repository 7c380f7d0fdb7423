use std::f64::consts::{LN_10, PI};
use std::fmt;

use fdu_math::{Error, Result, SeriesControl};
use fdu_rates::{occupation_argument, Direction};

use crate::{ev_to_per_second, to_natural, NaturalScenario, PhysicalConstants, SIScenario};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rb87Variant {
    Single,
    Pair,
}

impl Rb87Variant {
    /// Published rate in eV and s⁻¹ for this set-up.
    pub fn quoted(self) -> (f64, f64) {
        match self {
            Rb87Variant::Single => (3.38e-12, 5.12e3),
            Rb87Variant::Pair => (3.75e-12, 5.68e3),
        }
    }

    /// L = 100 nm, z₀ = 20 nm, a = 10¹⁷ m/s², λ = 0.1; gap 0.25 eV for one
    /// atom, 0.5 eV with d = 30 nm and θ = 3π/4 for the pair.
    pub fn scenario(self) -> SIScenario {
        let base = SIScenario {
            cavity_length: 100e-9,
            atom_boundary_distance: 20e-9,
            interatomic_distance: None,
            acceleration: 1e17,
            gap: 0.25,
            lambda: 0.1,
            theta: None,
        };
        match self {
            Rb87Variant::Single => base,
            Rb87Variant::Pair => SIScenario {
                gap: 0.5,
                interatomic_distance: Some(30e-9),
                theta: Some(3.0 * PI / 4.0),
                ..base
            },
        }
    }
}

/// Upward inertial-frame rate for a laboratory-scale cavity, next to the
/// published figure.
///
/// At these parameters 2πω₀/α is of order 10⁷, so the Planck factor
/// underflows and the rate is reported through its base-10 logarithm.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    pub variant: Rb87Variant,
    pub si: SIScenario,
    pub natural: NaturalScenario,
    pub omega0_l: f64,
    pub omega0_z0: f64,
    pub omega0_d: Option<f64>,
    pub alpha_over_omega0: f64,
    /// 2πω₀/α.
    pub occupation_argument: f64,
    /// log₁₀ e^{−2πω₀/α}.
    pub log10_boltzmann: f64,
    /// Geometric factor in eV.
    pub geometric_factor: f64,
    /// False when the image series hit its term budget; the factor is then
    /// the partial sum.
    pub series_converged: bool,
    /// Rate in eV; zero when it underflows.
    pub rate_ev: f64,
    pub rate_per_s: f64,
    /// log₁₀ of the rate in eV, when the geometric factor is positive.
    pub log10_rate_ev: Option<f64>,
    pub quoted_rate_ev: f64,
    pub quoted_rate_per_s: f64,
    /// The published eV value converted with ħ.
    pub quoted_ev_as_per_s: f64,
    /// log₁₀(computed/quoted).
    pub log10_ratio_to_quoted: Option<f64>,
}

pub fn estimate_rb87(variant: Rb87Variant) -> Result<EstimateReport> {
    estimate_rate(variant, &variant.scenario())
}

/// Same report for an arbitrary SI set-up; `variant` only selects which
/// published figure it is compared with.
pub fn estimate_rate(variant: Rb87Variant, si: &SIScenario) -> Result<EstimateReport> {
    let k = PhysicalConstants::CODATA_2018;
    let si = *si;
    let natural = to_natural(&si, &k)?;
    let scenario = natural.scenario(Direction::Upward);
    let omega0 = natural.atom.omega0.0;
    let x = occupation_argument(natural.atom.omega0, &natural.frame)
        .ok_or_else(|| Error::Internal("inertial frame has an occupation argument".into()))?;

    let (geometric_factor, series_converged, rate_ev) = match scenario.evaluate(&SeriesControl::default()) {
        Ok(b) => (b.geometric_factor, true, b.rate),
        Err(Error::Truncation { partial }) => (partial.value, false, 0.0),
        Err(e) => return Err(e),
    };
    // ln n(x) = −x − ln(1 − e^{−x}).
    let log10_occ = (-x - (-(-x).exp()).ln_1p()) / LN_10;
    let l2 = natural.atom.lambda.powi(2);
    let log10_rate_ev = (geometric_factor > 0.0).then(|| (l2 * geometric_factor).log10() + log10_occ);
    let (quoted_rate_ev, quoted_rate_per_s) = variant.quoted();
    let (z0, l) = match natural.geometry {
        fdu_rates::Geometry::Cavity { length, z0 } => (z0.0, length.0),
        _ => unreachable!("to_natural builds a cavity"),
    };
    Ok(EstimateReport {
        variant,
        si,
        omega0_l: omega0 * l,
        omega0_z0: omega0 * z0,
        omega0_d: natural.pair.map(|p| omega0 * p.d.0),
        alpha_over_omega0: natural.alpha_over_omega0(),
        occupation_argument: x,
        log10_boltzmann: -x / LN_10,
        geometric_factor,
        series_converged,
        rate_ev,
        rate_per_s: ev_to_per_second(rate_ev, &k),
        log10_rate_ev,
        quoted_rate_ev,
        quoted_rate_per_s,
        quoted_ev_as_per_s: ev_to_per_second(quoted_rate_ev, &k),
        log10_ratio_to_quoted: log10_rate_ev.map(|r| r - quoted_rate_ev.log10()),
        natural,
    })
}

impl fmt::Display for EstimateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.variant {
            Rb87Variant::Single => "single atom",
            Rb87Variant::Pair => "atom pair",
        };
        writeln!(f, "Rb-87 estimate ({name}, upward, inertial frame)")?;
        writeln!(
            f,
            "  L = {:e} m, z0 = {:e} m, a = {:e} m/s^2, gap = {} eV, lambda = {}",
            self.si.cavity_length, self.si.atom_boundary_distance, self.si.acceleration, self.si.gap, self.si.lambda
        )?;
        if let (Some(d), Some(t)) = (self.si.interatomic_distance, self.si.theta) {
            writeln!(f, "  d = {d:e} m, theta = {t}")?;
        }
        writeln!(f, "  omega0*L = {:.6}, omega0*z0 = {:.6}", self.omega0_l, self.omega0_z0)?;
        if let Some(d) = self.omega0_d {
            writeln!(f, "  omega0*d = {d:.6}")?;
        }
        writeln!(f, "  alpha/omega0 = {:.6e}", self.alpha_over_omega0)?;
        writeln!(f, "  2*pi*omega0/alpha = {:.6e}", self.occupation_argument)?;
        writeln!(f, "  Boltzmann factor = 10^({:.6e})", self.log10_boltzmann)?;
        let conv = if self.series_converged { "" } else { " (image series not converged; partial sum)" };
        writeln!(f, "  geometric factor = {:.6e} eV{conv}", self.geometric_factor)?;
        writeln!(f, "  computed rate = {:e} eV = {:e} s^-1", self.rate_ev, self.rate_per_s)?;
        match self.log10_rate_ev {
            Some(l) => writeln!(f, "  log10(rate / eV) = {l:.6e}")?,
            None => writeln!(f, "  log10(rate / eV) undefined (geometric factor <= 0)")?,
        }
        writeln!(
            f,
            "  quoted rate = {:e} eV = {:e} s^-1 (quoted eV value / hbar = {:.4e} s^-1)",
            self.quoted_rate_ev, self.quoted_rate_per_s, self.quoted_ev_as_per_s
        )?;
        match self.log10_ratio_to_quoted {
            Some(r) => write!(f, "  log10(computed / quoted) = {r:.6e}"),
            None => write!(f, "  computed / quoted undefined"),
        }
    }
}
