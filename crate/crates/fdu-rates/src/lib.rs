//! Transition rates of a uniformly accelerated two-level atom, or of an
//! entangled pair of such atoms, coupled to a massless scalar field in free
//! space, near one mirror, or between two mirrors.
//!
//! Every rate is reported as a [`RateBreakdown`]: the geometric factor (the
//! brace contents of the rate formula), the Planck occupation factor, and
//! their product times λ².

mod scenario;

pub use fdu_math::{Acceleration, Energy, Error, Length, Result, SeriesControl};
pub use scenario::{
    occupation_argument, occupation_factor, pair_geometric_factor, pair_rate, rate_ratio,
    single_geometric_factor, single_rate, AtomSpec, Direction, FrameSpec, GeometricFactor,
    Geometry, PairConfig, RateBreakdown, Scenario,
};
