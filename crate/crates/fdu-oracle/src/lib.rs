//! Brute-force evaluation of transition rates straight from the regularized
//! Wightman correlators: real-axis quadrature at finite ε, polynomial
//! extrapolation to ε → 0, and explicit image sums for the mirrors and for
//! the thermal (imaginary-time) images.
//!
//! Nothing here uses residues or the closed-form series, so agreement with
//! `fdu-rates` is a genuine check of both.

mod extrapolate;
mod grid;
mod images;
mod kernels;
mod quadrature;

use std::f64::consts::PI;

use rayon::prelude::*;

use fdu_math::{Error, Result};
use fdu_rates::{Acceleration, AtomSpec, Direction, Energy, FrameSpec, Geometry, Length, PairConfig, Scenario};

pub use grid::{default_grid, validate_grid, GridConfig, GridRow};
pub use quadrature::{integrate, Quadrature};

use kernels::{Inertial, Integrand, Thermal};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureControl {
    /// Regulator values, strictly decreasing. For the inertial correlator ε
    /// is in units of 1/α; for the thermal one in units of β/2π.
    pub epsilon_sequence: Vec<f64>,
    /// Proper-time extent of the integration window beyond the outermost
    /// pole. `None` means 40 decay lengths (40/α, or 40β/2π when thermal).
    pub window_halfwidth: Option<f64>,
    pub abs_tol: f64,
    /// Panel budget of each adaptive quadrature.
    pub max_subdivisions: usize,
}

impl Default for QuadratureControl {
    fn default() -> Self {
        QuadratureControl {
            epsilon_sequence: (0..6).map(|k| 1e-2 / f64::from(1 << k)).collect(),
            window_halfwidth: None,
            abs_tol: 1e-9,
            max_subdivisions: 20_000,
        }
    }
}

impl QuadratureControl {
    pub fn validate(&self) -> Result<()> {
        let e = &self.epsilon_sequence;
        if e.len() < 2 {
            return Err(Error::invalid("epsilon_sequence needs at least two values"));
        }
        if !e.iter().all(|x| x.is_finite() && *x > 0.0) || e.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::invalid("epsilon_sequence must be positive and strictly decreasing"));
        }
        if let Some(w) = self.window_halfwidth {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::invalid(format!("window_halfwidth must be > 0 (got {w})")));
            }
        }
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::invalid(format!("abs_tol must be > 0 (got {})", self.abs_tol)));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::invalid("max_subdivisions must be > 0"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    /// Bound on quadrature, extrapolation and image-truncation error.
    pub error_estimate: f64,
    /// Degree of the extrapolating polynomial in ε.
    pub epsilon_extrapolation_order: usize,
}

impl OracleResult {
    fn zero(order: usize) -> Self {
        OracleResult { value: 0.0, error_estimate: 0.0, epsilon_extrapolation_order: order }
    }

    fn add_scaled(&mut self, w: f64, r: &OracleResult) {
        self.value += w * r.value;
        self.error_estimate += w.abs() * r.error_estimate;
    }
}

/// Sorted panel boundaries: geometric refinement towards each pole, one
/// panel per decay length for a few decay lengths past the outermost pole,
/// then panels doubling in width out to `end`.
fn breakpoints(poles: &[f64], eps: f64, scale: f64, end: f64) -> Vec<f64> {
    let mut pts = vec![0.0, end];
    let mut outer: f64 = 0.0;
    for &p in poles {
        outer = outer.max(p);
        pts.push(p);
        let mut h = eps;
        while h <= 4.0 * scale {
            pts.push(p - h);
            pts.push(p + h);
            h *= 2.0;
        }
    }
    let uniform_end = outer + 4.0 * scale;
    let mut t = scale;
    while t < uniform_end.min(end) {
        pts.push(t);
        t += scale;
    }
    let mut h = scale;
    let mut t = uniform_end;
    while t < end {
        pts.push(t);
        t += h;
        h *= 2.0;
    }
    pts.retain(|&x| (0.0..=end).contains(&x));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// ∫_ℝ of the integrand at each ε, extrapolated to ε = 0. `window` is the
/// extent beyond the outermost pole in the integrand's own variable.
fn response(k: &dyn Integrand, window: f64, ctl: &QuadratureControl) -> Result<OracleResult> {
    let pref = 2.0 * k.prefactor();
    let scale = k.scale();
    let end = k.poles().into_iter().fold(0.0, f64::max) + window;
    let epsabs = 1e-3 * ctl.abs_tol / pref.abs();
    let mut values = Vec::with_capacity(ctl.epsilon_sequence.len());
    let mut quad_err = 0.0;
    for &e in &ctl.epsilon_sequence {
        let eps = e * scale;
        let pts = breakpoints(&k.poles(), eps, scale, end);
        let f = |t: f64| k.eval(t, eps);
        let q = quadrature::integrate(&f, &pts, epsabs, 1e-11, ctl.max_subdivisions).map_err(|q| {
            Error::Oracle(format!(
                "quadrature did not converge at eps={e}: value {} error {} after {} panels",
                q.value, q.error, q.intervals
            ))
        })?;
        quad_err = f64::max(quad_err, q.error);
        values.push(q.value);
    }
    let x: Vec<f64> = ctl.epsilon_sequence.clone();
    let ex = extrapolate::to_zero(&x, &values);
    let value = pref * ex.value;
    let error_estimate = pref.abs() * (ex.residual + ex.amplification * quad_err);
    if !value.is_finite() || error_estimate > 1e-3 * value.abs() + 1e3 * ctl.abs_tol {
        return Err(Error::Oracle(format!(
            "eps extrapolation failed: value {value}, error {error_estimate}, residual {}",
            ex.residual
        )));
    }
    Ok(OracleResult { value, error_estimate, epsilon_extrapolation_order: x.len() - 1 })
}

fn check_energy(de: f64) -> Result<()> {
    if !(de.is_finite() && de != 0.0) {
        return Err(Error::invalid(format!("dE must be finite and nonzero (got {de})")));
    }
    Ok(())
}

fn inertial_window(alpha: f64, ctl: &QuadratureControl) -> f64 {
    ctl.window_halfwidth.map_or(40.0, |w| alpha * w)
}

fn thermal_window(temperature: f64, ctl: &QuadratureControl) -> f64 {
    ctl.window_halfwidth.unwrap_or(40.0 / (2.0 * PI * temperature))
}

/// Response of an inertially-prepared detector to the vacuum seen along a
/// uniformly accelerated trajectory: ∫ e^{−iΔEΔτ} W(Δτ − iε) dΔτ with
/// W = −(α²/16π²) sinh⁻²((αΔτ − iε)/2).
pub fn oracle_i1(de: Energy, alpha: Acceleration, ctl: &QuadratureControl) -> Result<OracleResult> {
    ctl.validate()?;
    check_energy(de.0)?;
    let a = alpha.positive("alpha")?;
    response(&Inertial::new(de.0, a, 0.0), inertial_window(a, ctl), ctl)
}

/// Cross-correlator response for two trajectories separated by `dist`
/// transverse to the acceleration, using the half-separation convention:
/// the denominator is sinh²((αΔτ − iε)/2) − α²·dist².
pub fn oracle_i2(
    de: Energy,
    alpha: Acceleration,
    dist: Length,
    ctl: &QuadratureControl,
) -> Result<OracleResult> {
    ctl.validate()?;
    check_energy(de.0)?;
    let a = alpha.positive("alpha")?;
    let d = dist.positive("dist")?;
    response(&Inertial::new(de.0, a, 2.0 * d), inertial_window(a, ctl), ctl)
}

fn signed_gap(atom: &AtomSpec, dir: Direction) -> f64 {
    match dir {
        Direction::Upward => atom.omega0.0,
        Direction::Downward => -atom.omega0.0,
    }
}

/// Sums `image` over all mirror images with the correlator weights.
///
/// Cavity groups fall off like m⁻⁴ times a modulation of phase κ·ln m,
/// κ = 2|ΔE|/α. The envelope C = max |G_k|·k⁴ is taken over k ∈ [m·e^{−π/κ}, m],
/// at least half a modulation period, so Σ_{k>m} |G_k| ≲ C/(3m³); twice
/// that is both the stopping test and the truncation error reported.
fn image_sum(
    geom: &Geometry,
    pair: Option<&PairConfig>,
    kappa: f64,
    order: usize,
    ctl: &QuadratureControl,
    image: &(dyn Fn(f64) -> Result<OracleResult> + Sync),
) -> Result<OracleResult> {
    let w = images::Weights::new(pair);
    let mut total = OracleResult::zero(order);
    let mut scaled: Vec<f64> = Vec::new();
    let span = (-PI / kappa.max(1e-3)).exp();
    for m in 0u32.. {
        let group = images::group(geom, w, m);
        let parts: Vec<Result<OracleResult>> = group.par_iter().map(|&(d, _)| image(d)).collect();
        let mut g = OracleResult::zero(order);
        for (&(_, weight), r) in group.iter().zip(parts) {
            g.add_scaled(weight, &r?);
        }
        total.add_scaled(1.0, &g);
        if images::is_finite(geom) {
            break;
        }
        let mf = f64::from(m);
        scaled.push(g.value.abs() * mf.powi(4));
        if m >= MIN_GROUPS {
            let first = ((mf * span).floor() as usize).max(MIN_GROUPS as usize / 2);
            let envelope = scaled[first..].iter().fold(0.0, |a: f64, &b| a.max(b));
            let tail = 2.0 * envelope / (3.0 * mf.powi(3));
            if tail <= ctl.abs_tol.max(1e-6 * total.value.abs()) {
                total.error_estimate += tail;
                break;
            }
            if m >= MAX_GROUPS {
                return Err(Error::Oracle(format!(
                    "cavity image sum not converged after {m} groups (tail estimate {tail:e})"
                )));
            }
        }
    }
    Ok(total)
}

/// Cavity image groups always summed before the tail test, and the cap.
const MIN_GROUPS: u32 = 8;
const MAX_GROUPS: u32 = 20_000;

/// Inertial-frame rate from the Minkowski-vacuum correlators, summed over
/// mirror images.
pub fn oracle_inertial_rate(
    atom: &AtomSpec,
    geom: &Geometry,
    alpha: Acceleration,
    pair: Option<&PairConfig>,
    dir: Direction,
    ctl: &QuadratureControl,
) -> Result<OracleResult> {
    ctl.validate()?;
    atom.validate()?;
    geom.validate()?;
    if let Some(p) = pair {
        p.validate(geom)?;
    }
    let a = alpha.positive("alpha")?;
    let de = signed_gap(atom, dir);
    let window = inertial_window(a, ctl);
    let order = ctl.epsilon_sequence.len() - 1;
    let kappa = 2.0 * de.abs() / a;
    let r = image_sum(geom, pair, kappa, order, ctl, &|d| response(&Inertial::new(de, a, d), window, ctl))?;
    Ok(scale_rate(r, atom.lambda))
}

/// Coaccelerated-frame rate in a thermal state at temperature T, from the
/// imaginary-time image sum of the correlator, summed over mirror images.
pub fn oracle_thermal_rate(
    atom: &AtomSpec,
    geom: &Geometry,
    alpha: Acceleration,
    temperature: Energy,
    pair: Option<&PairConfig>,
    dir: Direction,
    ctl: &QuadratureControl,
) -> Result<OracleResult> {
    ctl.validate()?;
    atom.validate()?;
    geom.validate()?;
    if let Some(p) = pair {
        p.validate(geom)?;
    }
    let a = alpha.positive("alpha")?;
    let t = temperature.positive("T")?;
    let de = signed_gap(atom, dir);
    let window = thermal_window(t, ctl);
    let order = ctl.epsilon_sequence.len() - 1;
    let kappa = 2.0 * de.abs() / a;
    let r = image_sum(geom, pair, kappa, order, ctl, &|d| response(&Thermal::new(de, a, t, d), window, ctl))?;
    Ok(scale_rate(r, atom.lambda))
}

fn scale_rate(r: OracleResult, lambda: f64) -> OracleResult {
    let l2 = lambda * lambda;
    OracleResult { value: l2 * r.value, error_estimate: l2 * r.error_estimate, ..r }
}

/// Oracle rate for a full scenario, dispatching on the frame.
pub fn oracle_rate(s: &Scenario, ctl: &QuadratureControl) -> Result<OracleResult> {
    s.validate()?;
    let pair = s.pair.as_ref();
    match s.frame {
        FrameSpec::Inertial { alpha } => oracle_inertial_rate(&s.atom, &s.geometry, alpha, pair, s.direction, ctl),
        FrameSpec::Coaccelerated { alpha, temperature } => {
            oracle_thermal_rate(&s.atom, &s.geometry, alpha, temperature, pair, s.direction, ctl)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn breakpoints_are_sorted_and_bounded() {
        let p = breakpoints(&[0.0, 3.1], 1e-3, 1.0, 10.0);
        assert_eq!(p[0], 0.0);
        assert_eq!(*p.last().unwrap(), 10.0);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
        assert!(p.contains(&(3.1 + 1e-3)));
    }

    #[test]
    fn rejects_bad_control() {
        let ctl = QuadratureControl { epsilon_sequence: vec![1e-2, 2e-2], ..Default::default() };
        assert!(ctl.validate().is_err());
    }
}
