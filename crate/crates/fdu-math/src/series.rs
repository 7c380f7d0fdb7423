use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kernel::g_raw;
use crate::units::{finite, Acceleration, Energy, Length};

/// Truncation controls shared by all image sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::invalid(format!("rel_tol must be > 0 (got {})", self.rel_tol)));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::invalid(format!("abs_tol must be > 0 (got {})", self.abs_tol)));
        }
        if self.max_terms < 1 {
            return Err(Error::invalid("max_terms must be >= 1"));
        }
        Ok(())
    }
}

/// A truncated image sum. `tail_bound` bounds the error committed by
/// truncating the infinite sum (floating-point rounding is not included).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
    pub terms_used: usize,
}

#[derive(Clone, Copy)]
struct Kernel {
    de: f64,
    alpha: f64,
    kappa: f64,
}

impl Kernel {
    fn new(de: Energy, alpha: Acceleration) -> Result<Self> {
        let de = de.positive("dE")?;
        let alpha = alpha.positive("alpha")?;
        Ok(Kernel { de, alpha, kappa: 2.0 * de / alpha })
    }

    #[inline]
    fn g(&self, z: f64) -> f64 {
        g_raw(self.de, self.alpha, z)
    }

    /// ∫_Z^∞ g(z) dz together with a bound on the error of its evaluation.
    ///
    /// With u = asinh(αz) the integrand becomes sin(κu)/(4π sinh u); expanding
    /// 1/sinh u = 2 Σ_j e^{-(2j+1)u} gives a sum of elementary integrals.
    fn tail_integral(&self, z: f64) -> (f64, f64) {
        let u = (self.alpha * z).asinh();
        let k = self.kappa;
        let (s, c) = (k * u).sin_cos();
        let q = (-2.0 * u).exp();
        let mut w = (-u).exp();
        let mut acc = 0.0;
        let mut rem = f64::INFINITY;
        for j in 0..200_000u32 {
            let cj = f64::from(2 * j + 1);
            acc += 2.0 * w * (cj * s + k * c) / (cj * cj + k * k);
            w *= q;
            rem = 2.0 * w / ((cj + 2.0) * (1.0 - q));
            if rem <= 1e-17 * acc.abs() || w == 0.0 {
                break;
            }
        }
        (acc / (4.0 * PI), rem / (4.0 * PI))
    }
}

struct Arm {
    sum: f64,
    bound: f64,
    terms: usize,
    converged: bool,
}

/// One-sided sum Σ_{j≥1} g(r + j·h) with r ≥ -h/2.
///
/// Terms are added until the Euler–Maclaurin remainder bound drops below
/// the tolerance; the remaining tail is then replaced by
/// (1/h)∫_Z^∞ g + g(Z)/2 at Z = r + (K+1)h, whose error is at most
/// (h/8)∫_Z^∞ |g''| ≤ h(6+5κ+κ²)/(96π α Z³).
fn arm(k: &Kernel, r: f64, h: f64, ctl: &SeriesControl, budget: usize) -> Arm {
    let c = h * (6.0 + k.kappa * (5.0 + k.kappa)) / (96.0 * PI * k.alpha);
    let bound_at = |z: f64| c / (z * z * z);

    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut terms = 0;
    let mut converged = false;
    while terms < budget {
        terms += 1;
        let t = k.g(r + terms as f64 * h);
        let s = sum + t;
        comp += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
        sum = s;
        let partial = sum + comp;
        if bound_at(r + (terms + 1) as f64 * h) <= ctl.abs_tol.max(ctl.rel_tol * partial.abs()) {
            converged = true;
            break;
        }
    }
    let z = r + (terms + 1) as f64 * h;
    let (int, int_err) = k.tail_integral(z);
    Arm {
        sum: (sum + comp) + (int / h + 0.5 * k.g(z)),
        bound: bound_at(z) + int_err / h,
        terms,
        converged,
    }
}

fn finish(value: f64, tail_bound: f64, terms_used: usize, converged: bool) -> Result<SeriesValue> {
    let v = SeriesValue { value, tail_bound, terms_used };
    if converged {
        Ok(v)
    } else {
        Err(Error::Truncation { partial: v })
    }
}

/// Σ_{n∈ℤ} g(c − n·h), summed outward from the index nearest the peak.
fn centered(k: &Kernel, c: f64, h: f64, ctl: &SeriesControl) -> Result<SeriesValue> {
    ctl.validate()?;
    let n0 = (c / h).round();
    let r = c - n0 * h;
    let center = k.g(r);
    let budget = ctl.max_terms - 1;
    let up = arm(k, r, h, ctl, budget);
    let down = arm(k, -r, h, ctl, budget - up.terms);
    finish(
        center + (up.sum + down.sum),
        up.bound + down.bound,
        1 + up.terms + down.terms,
        up.converged && down.converged,
    )
}

/// f = 2 Σ_{n≥1} g(ΔE, α, nL/2).
pub fn f_sum(de: Energy, alpha: Acceleration, l: Length, ctl: &SeriesControl) -> Result<SeriesValue> {
    let k = Kernel::new(de, alpha)?;
    let h = l.positive("L")? / 2.0;
    ctl.validate()?;
    // Same arm and budget as the r = 0 arm of `centered`, so that
    // ΔE/2π + f and h(0), h(L/2) agree bit for bit.
    let a = arm(&k, 0.0, h, ctl, ctl.max_terms - 1);
    finish(2.0 * a.sum, 2.0 * a.bound, a.terms, a.converged)
}

/// h = Σ_{n∈ℤ} g(ΔE, α, z₀ − nL/2), for 0 ≤ z₀ ≤ L.
pub fn h_sum(de: Energy, alpha: Acceleration, z0: Length, l: Length, ctl: &SeriesControl) -> Result<SeriesValue> {
    let k = Kernel::new(de, alpha)?;
    let len = l.positive("L")?;
    let z0 = finite("z0", z0.0)?;
    if !(0.0..=len).contains(&z0) {
        return Err(Error::invalid(format!("z0 must satisfy 0 <= z0 <= L (got z0={z0}, L={len})")));
    }
    centered(&k, z0, len / 2.0, ctl)
}

/// m = Σ_{n∈ℤ} g(ΔE, α, z₀ + d − nL/2). Identical to `h_sum` at z₀ + d.
pub fn m_sum(
    de: Energy,
    alpha: Acceleration,
    z0: Length,
    d: Length,
    l: Length,
    ctl: &SeriesControl,
) -> Result<SeriesValue> {
    let k = Kernel::new(de, alpha)?;
    let len = l.positive("L")?;
    let c = finite("z0", z0.0)? + finite("d", d.0)?;
    centered(&k, c, len / 2.0, ctl)
}

/// n = Σ_{n∈ℤ} g(ΔE, α, (d − nL)/2).
pub fn n_sum(de: Energy, alpha: Acceleration, d: Length, l: Length, ctl: &SeriesControl) -> Result<SeriesValue> {
    let k = Kernel::new(de, alpha)?;
    let len = l.positive("L")?;
    let d = finite("d", d.0)?;
    centered(&k, d / 2.0, len / 2.0, ctl)
}
