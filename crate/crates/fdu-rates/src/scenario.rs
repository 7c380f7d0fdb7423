use std::f64::consts::PI;

use fdu_math::{
    f_sum, g_kernel, h_sum, m_sum, n_sum, planck_occupation, planck_occupation_plus_one,
    Acceleration, Energy, Error, Length, Result, SeriesControl, SeriesValue,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomSpec {
    pub omega0: Energy,
    pub lambda: f64,
}

impl AtomSpec {
    pub fn new(omega0: f64, lambda: f64) -> Self {
        AtomSpec { omega0: Energy(omega0), lambda }
    }

    pub fn validate(&self) -> Result<()> {
        self.omega0.positive("omega0")?;
        if !(self.lambda.is_finite() && self.lambda > 0.0) {
            return Err(Error::invalid(format!("lambda must be > 0 (got {})", self.lambda)));
        }
        Ok(())
    }

    /// λ²ω₀/2π, the unit in which the figures quote rates.
    pub fn rate_unit(&self) -> f64 {
        self.lambda * self.lambda * self.omega0.0 / (2.0 * PI)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    FreeSpace,
    SingleBoundary { z0: Length },
    Cavity { length: Length, z0: Length },
}

impl Geometry {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Geometry::FreeSpace => Ok(()),
            Geometry::SingleBoundary { z0 } => z0.positive("z0").map(|_| ()),
            Geometry::Cavity { length, z0 } => {
                let l = length.positive("L")?;
                let z = z0.0;
                if !(z.is_finite() && z > 0.0 && z < l) {
                    return Err(Error::invalid(format!("z0 must satisfy 0 < z0 < L (got z0={z}, L={l})")));
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FrameSpec {
    /// Instantaneously inertial observer; the field is in the Minkowski vacuum.
    Inertial { alpha: Acceleration },
    /// Coaccelerated observer; the field is thermal at temperature T.
    Coaccelerated { alpha: Acceleration, temperature: Energy },
}

impl FrameSpec {
    pub fn alpha(&self) -> Acceleration {
        match *self {
            FrameSpec::Inertial { alpha } | FrameSpec::Coaccelerated { alpha, .. } => alpha,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.alpha().positive("alpha")?;
        if let FrameSpec::Coaccelerated { temperature, .. } = *self {
            let t = temperature.0;
            if !(t.is_finite() && t >= 0.0) {
                return Err(Error::invalid(format!("T must be >= 0 (got {t})")));
            }
        }
        Ok(())
    }
}

/// Entangled pair |ψ⟩ = sinθ|e_A g_B⟩ + cosθ|g_A e_B⟩ with atom A at z₀ and
/// atom B at z₀ + d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairConfig {
    pub theta: f64,
    pub d: Length,
}

impl PairConfig {
    pub fn validate(&self, geom: &Geometry) -> Result<()> {
        let th = self.theta;
        if !(th.is_finite() && (0.0..=PI).contains(&th)) {
            return Err(Error::invalid(format!("theta must satisfy 0 <= theta <= pi (got {th})")));
        }
        let d = self.d.positive("d")?;
        if let Geometry::Cavity { length, z0 } = *geom {
            if !(z0.0 + d < length.0) {
                return Err(Error::invalid(format!(
                    "z0 + d must be < L (got z0={}, d={d}, L={})",
                    z0.0, length.0
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Upward,
    Downward,
}

impl Direction {
    pub fn opposite(self) -> Self {
        match self {
            Direction::Upward => Direction::Downward,
            Direction::Downward => Direction::Upward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateBreakdown {
    pub geometric_factor: f64,
    pub occupation_factor: f64,
    /// λ² · geometric_factor · occupation_factor.
    pub rate: f64,
    /// Bound on the error of `rate` from truncating the image sums.
    pub truncation_error: f64,
}

impl RateBreakdown {
    /// The rate in units of λ²ω₀/2π.
    pub fn rate_per_unit(&self, atom: &AtomSpec) -> f64 {
        self.rate / atom.rate_unit()
    }
}

/// A geometric factor together with the truncation error of the sums in it
/// and the magnitude of its largest contribution (for rounding estimates).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricFactor {
    pub value: f64,
    pub truncation_error: f64,
    pub magnitude: f64,
}

struct Acc {
    value: f64,
    err: f64,
    mag: f64,
}

impl Acc {
    fn new(v: f64) -> Self {
        Acc { value: v, err: 0.0, mag: v.abs() }
    }

    fn add(&mut self, coef: f64, s: SeriesValue) {
        if coef != 0.0 {
            self.value += coef * s.value;
            self.err += coef.abs() * s.tail_bound;
            self.mag = self.mag.max((coef * s.value).abs());
        }
    }

    fn add_plain(&mut self, v: f64) {
        self.value += v;
        self.mag = self.mag.max(v.abs());
    }

    fn finish(self) -> GeometricFactor {
        let mut value = self.value;
        // Rounding or truncation can leave an exact zero slightly negative.
        let slack = self.err + 16.0 * f64::EPSILON * self.mag;
        if value < 0.0 && value >= -slack {
            value = 0.0;
        }
        GeometricFactor { value, truncation_error: self.err, magnitude: self.mag }
    }
}

/// Brace contents of the single-atom rate:
/// ω₀/2π (free), ω₀/2π − g(z₀) (one mirror), ω₀/2π + f − h(z₀) (cavity).
pub fn single_geometric_factor(
    atom: &AtomSpec,
    geom: &Geometry,
    alpha: Acceleration,
    ctl: &SeriesControl,
) -> Result<GeometricFactor> {
    atom.validate()?;
    geom.validate()?;
    alpha.positive("alpha")?;
    let w = atom.omega0;
    let q = w.0 / (2.0 * PI);
    let gf = match *geom {
        Geometry::FreeSpace => Acc::new(q).finish(),
        Geometry::SingleBoundary { z0 } => {
            let mut a = Acc::new(q);
            a.add_plain(-g_kernel(w, alpha, z0)?);
            a.finish()
        }
        Geometry::Cavity { length, z0 } => {
            let mut a = Acc::new(q);
            a.add(1.0, f_sum(w, alpha, length, ctl)?);
            a.add(-1.0, h_sum(w, alpha, z0, length, ctl)?);
            a.finish()
        }
    };
    Ok(gf)
}

/// Brace contents of the pair rate for |ψ⟩ → |e_A e_B⟩ and |ψ⟩ → |g_A g_B⟩.
pub fn pair_geometric_factor(
    atom: &AtomSpec,
    geom: &Geometry,
    alpha: Acceleration,
    pair: &PairConfig,
    ctl: &SeriesControl,
) -> Result<GeometricFactor> {
    atom.validate()?;
    geom.validate()?;
    pair.validate(geom)?;
    alpha.positive("alpha")?;
    let w = atom.omega0;
    let q = w.0 / (2.0 * PI);
    let (s, c) = pair.theta.sin_cos();
    let (cos2, sin2, sin2t) = (c * c, s * s, (2.0 * pair.theta).sin());
    let d = pair.d.0;
    let g = |z: f64| g_kernel(w, alpha, Length(z));

    let gf = match *geom {
        Geometry::FreeSpace => {
            let mut a = Acc::new(q);
            a.add_plain(sin2t * g(d / 2.0)?);
            a.finish()
        }
        Geometry::SingleBoundary { z0 } => {
            let z0 = z0.0;
            let mut a = Acc::new(q);
            a.add_plain(-cos2 * g(z0)?);
            a.add_plain(-sin2 * g(z0 + d)?);
            a.add_plain(sin2t * (g(d / 2.0)? - g(z0 + d / 2.0)?));
            a.finish()
        }
        Geometry::Cavity { length, z0 } => {
            let mut a = Acc::new(q);
            a.add(1.0, f_sum(w, alpha, length, ctl)?);
            if cos2 != 0.0 {
                a.add(-cos2, h_sum(w, alpha, z0, length, ctl)?);
            }
            if sin2 != 0.0 {
                a.add(-sin2, m_sum(w, alpha, z0, pair.d, length, ctl)?);
            }
            if sin2t != 0.0 {
                a.add(sin2t, n_sum(w, alpha, pair.d, length, ctl)?);
                a.add(-sin2t, m_sum(w, alpha, z0, Length(d / 2.0), length, ctl)?);
            }
            a.finish()
        }
    };
    Ok(gf)
}

/// The Planck-factor argument: 2πω₀/α for the inertial observer, ω₀/T for
/// the coaccelerated one. `None` means T = 0.
pub fn occupation_argument(omega0: Energy, frame: &FrameSpec) -> Option<f64> {
    match *frame {
        FrameSpec::Inertial { alpha } => Some(2.0 * PI * omega0.0 / alpha.0),
        FrameSpec::Coaccelerated { temperature, .. } => {
            if temperature.0 == 0.0 {
                None
            } else {
                Some(omega0.0 / temperature.0)
            }
        }
    }
}

/// n(x) for upward transitions, 1 + n(x) for downward ones. At T = 0 these
/// are 0 and 1.
pub fn occupation_factor(omega0: Energy, frame: &FrameSpec, dir: Direction) -> Result<f64> {
    frame.validate()?;
    omega0.positive("omega0")?;
    match (occupation_argument(omega0, frame), dir) {
        (None, Direction::Upward) => Ok(0.0),
        (None, Direction::Downward) => Ok(1.0),
        (Some(x), Direction::Upward) => planck_occupation(x),
        (Some(x), Direction::Downward) => planck_occupation_plus_one(x),
    }
}

fn assemble(atom: &AtomSpec, gf: GeometricFactor, frame: &FrameSpec, dir: Direction) -> Result<RateBreakdown> {
    let occ = occupation_factor(atom.omega0, frame, dir)?;
    let l2 = atom.lambda * atom.lambda;
    Ok(RateBreakdown {
        geometric_factor: gf.value,
        occupation_factor: occ,
        rate: l2 * gf.value * occ,
        truncation_error: l2 * gf.truncation_error * occ,
    })
}

pub fn single_rate(
    atom: &AtomSpec,
    geom: &Geometry,
    frame: &FrameSpec,
    dir: Direction,
    ctl: &SeriesControl,
) -> Result<RateBreakdown> {
    frame.validate()?;
    let gf = single_geometric_factor(atom, geom, frame.alpha(), ctl)?;
    assemble(atom, gf, frame, dir)
}

pub fn pair_rate(
    atom: &AtomSpec,
    geom: &Geometry,
    frame: &FrameSpec,
    pair: &PairConfig,
    dir: Direction,
    ctl: &SeriesControl,
) -> Result<RateBreakdown> {
    frame.validate()?;
    let gf = pair_geometric_factor(atom, geom, frame.alpha(), pair, ctl)?;
    assemble(atom, gf, frame, dir)
}

/// Upward over downward rate. For every valid scenario this equals e^{−x}
/// with x the occupation argument.
///
/// Both rates share the same geometric factor. When it vanishes (midplane
/// of a cavity, or a cavity too short to support the transition) the ratio
/// is taken as its limit, the ratio of occupation factors.
pub fn rate_ratio(
    atom: &AtomSpec,
    geom: &Geometry,
    frame: &FrameSpec,
    pair: Option<&PairConfig>,
    ctl: &SeriesControl,
) -> Result<f64> {
    let s = Scenario { atom: *atom, geometry: *geom, frame: *frame, pair: pair.copied(), direction: Direction::Upward };
    let up = s.evaluate(ctl)?;
    let down = Scenario { direction: Direction::Downward, ..s }.evaluate(ctl)?;
    if down.rate != 0.0 {
        return Ok(up.rate / down.rate);
    }
    if up.rate == 0.0 && down.geometric_factor == 0.0 && down.occupation_factor > 0.0 {
        return Ok(up.occupation_factor / down.occupation_factor);
    }
    Err(Error::Internal(format!(
        "downward rate is zero with geometric factor {:e} and occupation {:e}",
        down.geometric_factor, down.occupation_factor
    )))
}

/// Everything needed to evaluate one rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub atom: AtomSpec,
    pub geometry: Geometry,
    pub frame: FrameSpec,
    pub pair: Option<PairConfig>,
    pub direction: Direction,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        self.atom.validate()?;
        self.geometry.validate()?;
        self.frame.validate()?;
        if let Some(p) = &self.pair {
            p.validate(&self.geometry)?;
        }
        Ok(())
    }

    pub fn evaluate(&self, ctl: &SeriesControl) -> Result<RateBreakdown> {
        match &self.pair {
            None => single_rate(&self.atom, &self.geometry, &self.frame, self.direction, ctl),
            Some(p) => pair_rate(&self.atom, &self.geometry, &self.frame, p, self.direction, ctl),
        }
    }
}
