//! Fixed set of scenarios on which the oracle and the closed forms are
//! compared.

use std::f64::consts::PI;

use fdu_math::{Result, SeriesControl};
use fdu_rates::{Acceleration, AtomSpec, Direction, Energy, FrameSpec, Geometry, Length, PairConfig, Scenario};
use rayon::prelude::*;

use crate::{oracle_rate, QuadratureControl};

#[derive(Debug, Clone, PartialEq)]
pub struct GridConfig {
    pub label: String,
    pub scenario: Scenario,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridRow {
    pub label: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub error_estimate: f64,
    pub rel_dev: f64,
    pub pass: bool,
}

fn inertial(alpha: f64) -> FrameSpec {
    FrameSpec::Inertial { alpha: Acceleration(alpha) }
}

fn thermal(alpha: f64, t: f64) -> FrameSpec {
    FrameSpec::Coaccelerated { alpha: Acceleration(alpha), temperature: Energy(t) }
}

fn boundary(z0: f64) -> Geometry {
    Geometry::SingleBoundary { z0: Length(z0) }
}

fn cavity(l: f64, z0: f64) -> Geometry {
    Geometry::Cavity { length: Length(l), z0: Length(z0) }
}

fn pair(theta: f64, d: f64) -> Option<PairConfig> {
    Some(PairConfig { theta, d: Length(d) })
}

/// Twenty configurations covering single atoms and pairs in free space,
/// near one mirror and in a cavity, in both frames and both directions.
pub fn default_grid() -> Vec<GridConfig> {
    use Direction::{Downward as Dn, Upward as Up};
    let free = Geometry::FreeSpace;
    let unruh = |a: f64| a / (2.0 * PI);
    let rows: Vec<(&str, Geometry, FrameSpec, Option<PairConfig>, Direction)> = vec![
        ("single free inertial up", free, inertial(4.0), None, Up),
        ("single free inertial down", free, inertial(2.0), None, Dn),
        ("single boundary inertial up", boundary(0.3), inertial(4.0), None, Up),
        ("single boundary inertial down", boundary(0.8), inertial(1.5), None, Dn),
        ("single cavity inertial up", cavity(3.0, 0.6), inertial(4.0), None, Up),
        ("single cavity inertial down", cavity(1.2, 0.2), inertial(4.0), None, Dn),
        ("single free thermal up", free, thermal(4.0, 0.3), None, Up),
        ("single boundary thermal up (Unruh T)", boundary(0.5), thermal(4.0, unruh(4.0)), None, Up),
        ("single cavity thermal up", cavity(2.0, 0.7), thermal(3.0, 0.5), None, Up),
        ("single cavity thermal down", cavity(3.0, 0.6), thermal(4.0, 0.2), None, Dn),
        ("pair free inertial up", free, inertial(4.0), pair(PI / 4.0, 0.5), Up),
        ("pair free inertial down", free, inertial(2.0), pair(3.0 * PI / 4.0, 0.8), Dn),
        ("pair boundary inertial up", boundary(0.3), inertial(4.0), pair(PI / 3.0, 0.5), Up),
        ("pair cavity inertial up", cavity(1.2, 0.2), inertial(4.0), pair(3.0 * PI / 4.0, 0.5), Up),
        ("pair cavity inertial down", cavity(3.0, 0.6), inertial(4.0), pair(PI / 6.0, 0.5), Dn),
        ("pair free thermal up", free, thermal(4.0, 0.7), pair(PI / 4.0, 0.5), Up),
        ("pair boundary thermal down", boundary(0.4), thermal(2.0, 0.4), pair(2.0 * PI / 3.0, 0.3), Dn),
        ("pair cavity thermal up (Unruh T)", cavity(1.5, 0.3), thermal(4.0, unruh(4.0)), pair(3.0 * PI / 4.0, 0.5), Up),
        ("pair cavity thermal down", cavity(4.0, 1.0), thermal(4.0, 0.3), pair(PI / 4.0, 0.5), Dn),
        ("single boundary thermal down", boundary(1.0), thermal(1.0, 0.25), None, Dn),
    ];
    rows.into_iter()
        .map(|(label, geometry, frame, pair, direction)| GridConfig {
            label: label.to_string(),
            scenario: Scenario { atom: AtomSpec::new(1.0, 1.0), geometry, frame, pair, direction },
        })
        .collect()
}

/// Evaluates every configuration both ways. A row passes when the relative
/// deviation is within max(1e-5, error_estimate/|closed form|).
pub fn validate_grid(grid: &[GridConfig], ctl: &QuadratureControl) -> Result<Vec<GridRow>> {
    let series = SeriesControl::default();
    grid.par_iter()
        .map(|c| {
            let closed = c.scenario.evaluate(&series)?.rate;
            let o = oracle_rate(&c.scenario, ctl)?;
            let scale = closed.abs().max(ctl.abs_tol);
            let rel_dev = (o.value - closed).abs() / scale;
            Ok(GridRow {
                label: c.label.clone(),
                closed_form: closed,
                oracle: o.value,
                error_estimate: o.error_estimate,
                rel_dev,
                pass: rel_dev <= f64::max(1e-5, o.error_estimate / scale),
            })
        })
        .collect()
}
