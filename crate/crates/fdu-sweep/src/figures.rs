//! Fixed parameters and axis ranges of every figure. Ranges not stated in
//! the captions were read off the plots; they all live in [`TABLE`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use fdu_math::{Error, Result, SeriesControl};
use fdu_rates::{Acceleration, AtomSpec, Direction, FrameSpec, Geometry, Length, PairConfig, Scenario};

use crate::{linear_grid, log_grid, run_sweep, Overlay, Param, SweepSpec, SweepTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    Fig2LSweep,
    Fig3ZSweep,
    Fig4ASweep,
    Fig5FreeVsCavitySingle,
    Fig6ThetaUp,
    Fig6ThetaDown,
    Fig7LPair,
    Fig8ZPair,
    Fig9DPair,
    Fig10APair,
    Fig11FreeVsCavityPair,
}

/// Points per axis, endpoints included; odd so that midpoints such as
/// z₀ = L/2 and θ = π/2 fall on the grid.
pub const POINTS: usize = 401;

#[derive(Clone, Copy)]
enum Spacing {
    Linear,
    Log,
}

/// Curve description: label, geometry, pair (θ, d), α, direction.
type Curve = (&'static str, Geo, Option<(f64, f64)>, f64, Direction);

#[derive(Clone, Copy)]
enum Geo {
    Free,
    Boundary(f64),
    Cavity(f64, f64),
}

struct FigureConfig {
    id: FigureId,
    name: &'static str,
    parameter: Param,
    range: (f64, f64),
    spacing: Spacing,
    curves: &'static [Curve],
}

const UP: Direction = Direction::Upward;
const DOWN: Direction = Direction::Downward;
const SUB: f64 = 3.0 * PI / 4.0;

/// ω₀ = 1 and λ = 1 throughout; all lengths are ω₀L etc., accelerations α/ω₀.
const TABLE: &[FigureConfig] = &[
    FigureConfig {
        id: FigureId::Fig2LSweep,
        name: "fig2_L_sweep",
        parameter: Param::L,
        range: (1.0, 1000.0),
        spacing: Spacing::Log,
        curves: &[
            ("z0=0.2", Geo::Cavity(1.0, 0.2), None, 4.0, UP),
            ("z0=0.4", Geo::Cavity(1.0, 0.4), None, 4.0, UP),
            ("z0=0.6", Geo::Cavity(1.0, 0.6), None, 4.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig3ZSweep,
        name: "fig3_z_sweep",
        parameter: Param::Z0,
        range: (0.0, 4.0),
        spacing: Spacing::Linear,
        curves: &[
            ("L=1", Geo::Cavity(1.0, 0.5), None, 4.0, UP),
            ("L=2", Geo::Cavity(2.0, 0.5), None, 4.0, UP),
            ("L=3", Geo::Cavity(3.0, 0.5), None, 4.0, UP),
            ("L=4", Geo::Cavity(4.0, 0.5), None, 4.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig4ASweep,
        name: "fig4_a_sweep",
        parameter: Param::Alpha,
        range: (0.5, 10.0),
        spacing: Spacing::Linear,
        curves: &[
            ("L=1", Geo::Cavity(1.0, 0.3), None, 1.0, UP),
            ("L=2", Geo::Cavity(2.0, 0.3), None, 1.0, UP),
            ("L=3", Geo::Cavity(3.0, 0.3), None, 1.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig5FreeVsCavitySingle,
        name: "fig5_free_vs_cavity_single",
        parameter: Param::Alpha,
        range: (0.5, 10.0),
        spacing: Spacing::Linear,
        curves: &[
            ("free up", Geo::Free, None, 1.0, UP),
            ("free down", Geo::Free, None, 1.0, DOWN),
            ("cavity up", Geo::Cavity(3.0, 0.6), None, 1.0, UP),
            ("cavity down", Geo::Cavity(3.0, 0.6), None, 1.0, DOWN),
        ],
    },
    FigureConfig {
        id: FigureId::Fig6ThetaUp,
        name: "fig6_theta_up",
        parameter: Param::Theta,
        range: (0.0, PI),
        spacing: Spacing::Linear,
        curves: &[
            ("free", Geo::Free, Some((0.0, 0.5)), 4.0, UP),
            ("boundary", Geo::Boundary(0.2), Some((0.0, 0.5)), 4.0, UP),
            ("cavity", Geo::Cavity(1.2, 0.2), Some((0.0, 0.5)), 4.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig6ThetaDown,
        name: "fig6_theta_down",
        parameter: Param::Theta,
        range: (0.0, PI),
        spacing: Spacing::Linear,
        curves: &[
            ("free", Geo::Free, Some((0.0, 0.5)), 4.0, DOWN),
            ("boundary", Geo::Boundary(0.2), Some((0.0, 0.5)), 4.0, DOWN),
            ("cavity", Geo::Cavity(1.2, 0.2), Some((0.0, 0.5)), 4.0, DOWN),
        ],
    },
    FigureConfig {
        id: FigureId::Fig7LPair,
        name: "fig7_L_pair",
        parameter: Param::L,
        range: (2.0, 1000.0),
        spacing: Spacing::Log,
        curves: &[
            ("z0=0.2", Geo::Cavity(2.0, 0.2), Some((SUB, 0.5)), 4.0, UP),
            ("z0=0.4", Geo::Cavity(2.0, 0.4), Some((SUB, 0.5)), 4.0, UP),
            ("z0=0.6", Geo::Cavity(2.0, 0.6), Some((SUB, 0.5)), 4.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig8ZPair,
        name: "fig8_z_pair",
        parameter: Param::Z0,
        range: (0.0, 3.0),
        spacing: Spacing::Linear,
        curves: &[
            ("d=0.25", Geo::Cavity(3.0, 0.5), Some((SUB, 0.25)), 4.0, UP),
            ("d=0.5", Geo::Cavity(3.0, 0.5), Some((SUB, 0.5)), 4.0, UP),
            ("d=1", Geo::Cavity(3.0, 0.5), Some((SUB, 1.0)), 4.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig9DPair,
        name: "fig9_d_pair",
        parameter: Param::D,
        range: (0.0, 1.5),
        spacing: Spacing::Linear,
        curves: &[
            ("z0=0.1", Geo::Cavity(1.5, 0.1), Some((SUB, 0.5)), 4.0, UP),
            ("z0=0.2", Geo::Cavity(1.5, 0.2), Some((SUB, 0.5)), 4.0, UP),
            ("z0=0.3", Geo::Cavity(1.5, 0.3), Some((SUB, 0.5)), 4.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig10APair,
        name: "fig10_a_pair",
        parameter: Param::Alpha,
        range: (0.5, 10.0),
        spacing: Spacing::Linear,
        curves: &[
            ("L=1", Geo::Cavity(1.0, 0.3), Some((SUB, 0.5)), 1.0, UP),
            ("L=2", Geo::Cavity(2.0, 0.3), Some((SUB, 0.5)), 1.0, UP),
            ("L=3", Geo::Cavity(3.0, 0.3), Some((SUB, 0.5)), 1.0, UP),
        ],
    },
    FigureConfig {
        id: FigureId::Fig11FreeVsCavityPair,
        name: "fig11_free_vs_cavity_pair",
        parameter: Param::Alpha,
        range: (0.5, 10.0),
        spacing: Spacing::Linear,
        curves: &[
            ("free up", Geo::Free, Some((SUB, 0.5)), 1.0, UP),
            ("free down", Geo::Free, Some((SUB, 0.5)), 1.0, DOWN),
            ("cavity up", Geo::Cavity(4.0, 1.0), Some((SUB, 0.5)), 1.0, UP),
            ("cavity down", Geo::Cavity(4.0, 1.0), Some((SUB, 0.5)), 1.0, DOWN),
        ],
    },
];

impl FigureId {
    pub const ALL: [FigureId; 11] = [
        FigureId::Fig2LSweep,
        FigureId::Fig3ZSweep,
        FigureId::Fig4ASweep,
        FigureId::Fig5FreeVsCavitySingle,
        FigureId::Fig6ThetaUp,
        FigureId::Fig6ThetaDown,
        FigureId::Fig7LPair,
        FigureId::Fig8ZPair,
        FigureId::Fig9DPair,
        FigureId::Fig10APair,
        FigureId::Fig11FreeVsCavityPair,
    ];

    fn config(self) -> &'static FigureConfig {
        TABLE.iter().find(|c| c.id == self).expect("every figure has a table entry")
    }

    /// Identifier used for file names, e.g. `fig2_L_sweep`.
    pub fn name(self) -> &'static str {
        self.config().name
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown figure '{s}'")))
    }
}

fn scenario(curve: &Curve) -> Scenario {
    let &(_, geo, pair, alpha, direction) = curve;
    let geometry = match geo {
        Geo::Free => Geometry::FreeSpace,
        Geo::Boundary(z0) => Geometry::SingleBoundary { z0: Length(z0) },
        Geo::Cavity(l, z0) => Geometry::Cavity { length: Length(l), z0: Length(z0) },
    };
    Scenario {
        atom: AtomSpec::new(1.0, 1.0),
        geometry,
        frame: FrameSpec::Inertial { alpha: Acceleration(alpha) },
        pair: pair.map(|(theta, d)| PairConfig { theta, d: Length(d) }),
        direction,
    }
}

pub fn figure_spec(id: FigureId) -> SweepSpec {
    let c = id.config();
    let (a, b) = c.range;
    let grid = match c.spacing {
        Spacing::Linear => linear_grid(a, b, POINTS),
        Spacing::Log => log_grid(a, b, POINTS),
    }
    .expect("figure ranges are valid");
    let overlays = c.curves.iter().map(|cv| Overlay { label: cv.0.to_string(), scenario: scenario(cv) }).collect();
    SweepSpec { parameter: c.parameter, grid, overlays }
}

/// The curves plotted in a figure, per unit λ²ω₀/2π in `rate_per_unit`.
pub fn figure_dataset(id: FigureId) -> Result<SweepTable> {
    run_sweep(&figure_spec(id), &SeriesControl::default())
}
