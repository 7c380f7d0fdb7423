//! Regularized correlators along the trajectory, one image at a time.
//!
//! An image at separation D contributes, per unit weight, the Fourier
//! transform of
//!
//! * inertial: −(α²/16π²) / [sinh²((αΔτ − iε)/2) − (αD/2)²]
//! * thermal:  −(1/4π²) Σ_s (B/C) / [(Δτ − isβ − iε)² − B²],
//!   B = (2/α) asinh(αD/2), C = D √(1 + α²D²/4)
//!
//! with D = 0 giving sinh⁻² and Σ_s (Δτ − isβ − iε)⁻² respectively.

use std::f64::consts::PI;

use num_complex::Complex64 as C;

/// Thermal images summed explicitly on each side of s = 0 before the
/// Euler–Maclaurin tail takes over. Since |x − isβ ∓ B| ≥ sβ for real B,
/// the remainder after the B₈ term is below 1e-12/β² for any x.
pub(crate) const THERMAL_IMAGES: u32 = 10;

pub(crate) trait Integrand: Sync {
    /// Real part of the integrand at `t` ≥ 0 for regulator `eps` (in the
    /// integration variable). The integrand is even in t.
    fn eval(&self, t: f64, eps: f64) -> f64;
    /// Real poles on t ≥ 0 approached by the integrand as eps → 0.
    fn poles(&self) -> Vec<f64>;
    /// Natural length scale of the integration variable (one decay length).
    fn scale(&self) -> f64;
    /// Multiplies 2∫₀^W to give the response.
    fn prefactor(&self) -> f64;
}

/// Inertial image in σ = αΔτ.
pub(crate) struct Inertial {
    xi: f64,
    alpha: f64,
    /// asinh(αD/2), half the pole position.
    y: f64,
}

impl Inertial {
    pub fn new(de: f64, alpha: f64, dist: f64) -> Self {
        Inertial { xi: de / alpha, alpha, y: (0.5 * alpha * dist).asinh() }
    }
}

impl Integrand for Inertial {
    fn eval(&self, sigma: f64, eps: f64) -> f64 {
        let z = C::new(0.5 * sigma, -0.5 * eps);
        let den = if self.y == 0.0 {
            let s = z.sinh();
            s * s
        } else {
            // sinh²z − sinh²y without cancellation near the pole.
            (z - self.y).sinh() * (z + self.y).sinh()
        };
        (C::from_polar(1.0, -self.xi * sigma) / den).re
    }

    fn poles(&self) -> Vec<f64> {
        vec![2.0 * self.y]
    }

    fn scale(&self) -> f64 {
        1.0
    }

    fn prefactor(&self) -> f64 {
        -self.alpha / (16.0 * PI * PI)
    }
}

/// Thermal image in proper time τ with imaginary-time images s·β.
pub(crate) struct Thermal {
    e: f64,
    beta: f64,
    /// B; zero for the coincident image.
    b: f64,
    /// 1/(2C), so that the kernel is k[(x − B)⁻¹ − (x + B)⁻¹].
    k: f64,
}

impl Thermal {
    pub fn new(de: f64, alpha: f64, temperature: f64, dist: f64) -> Self {
        let beta = 1.0 / temperature;
        if dist == 0.0 {
            return Thermal { e: de, beta, b: 0.0, k: 0.0 };
        }
        let h = 0.5 * alpha * dist;
        let b = 2.0 / alpha * h.asinh();
        let c = dist * 1f64.hypot(h);
        Thermal { e: de, beta, b, k: 0.5 / c }
    }

    fn kernel(&self, x: C) -> C {
        if self.b == 0.0 {
            (x * x).inv()
        } else {
            2.0 * self.b * self.k / ((x - self.b) * (x + self.b))
        }
    }

    /// Antiderivative vanishing at infinity, then W, W', W''', W⁽⁵⁾, W⁽⁷⁾.
    fn derivatives(&self, x: C) -> [C; 6] {
        if self.b == 0.0 {
            let r = x.inv();
            let r2 = r * r;
            let r3 = r2 * r;
            let r5 = r3 * r2;
            let r7 = r5 * r2;
            return [-r, r2, -2.0 * r3, -24.0 * r5, -720.0 * r7, -40320.0 * r7 * r2];
        }
        let k = self.k;
        let ra = (x - self.b).inv();
        let rb = (x + self.b).inv();
        let u = 2.0 * self.b * rb;
        let log = if u.norm() < 0.25 {
            // ln(1 − u) by its series.
            let mut term = u;
            let mut acc = C::new(0.0, 0.0);
            let mut n = 1.0;
            while term.norm() > 1e-18 * acc.norm().max(f64::MIN_POSITIVE) && n < 200.0 {
                acc -= term / n;
                term *= u;
                n += 1.0;
            }
            acc
        } else {
            (rb / ra).ln()
        };
        // ra^m − rb^m = 2B·ra·rb·Σ_{j<m} ra^j rb^(m−1−j), free of
        // cancellation when B ≪ |x|.
        let d1 = 2.0 * self.b * ra * rb;
        let mut sum = C::new(1.0, 0.0);
        let mut rbp = C::new(1.0, 0.0);
        let mut diff = [C::new(0.0, 0.0); 9];
        diff[1] = d1;
        for m in 2..=8 {
            rbp *= rb;
            sum = ra * sum + rbp;
            diff[m] = d1 * sum;
        }
        [k * log, k * diff[1], -k * diff[2], -6.0 * k * diff[4], -120.0 * k * diff[6], -5040.0 * k * diff[8]]
    }

    /// Σ_{s > n} W(x0 + c·s) by Euler–Maclaurin through the B₈ term.
    fn tail(&self, x0: C, c: C, n: u32) -> C {
        let a = f64::from(n + 1);
        let x = x0 + c * a;
        let [p, w0, w1, w3, w5, w7] = self.derivatives(x);
        let c2 = c * c;
        let c3 = c2 * c;
        let c5 = c3 * c2;
        -p / c + 0.5 * w0 - c * w1 / 12.0 + c3 * w3 / 720.0 - c5 * w5 / 30240.0 + c5 * c2 * w7 / 1_209_600.0
    }

    /// Σ_{s∈ℤ} W(x − isβ).
    pub fn image_sum(&self, x: C) -> C {
        let n = THERMAL_IMAGES;
        let mut acc = self.kernel(x);
        for s in 1..=n {
            let shift = C::new(0.0, f64::from(s) * self.beta);
            acc += self.kernel(x - shift) + self.kernel(x + shift);
        }
        let c = C::new(0.0, self.beta);
        acc + self.tail(x, -c, n) + self.tail(x, c, n)
    }
}

impl Integrand for Thermal {
    fn eval(&self, tau: f64, eps: f64) -> f64 {
        let x = C::new(tau, -eps);
        (C::from_polar(1.0, -self.e * tau) * self.image_sum(x)).re
    }

    fn poles(&self) -> Vec<f64> {
        vec![self.b]
    }

    fn scale(&self) -> f64 {
        self.beta / (2.0 * PI)
    }

    fn prefactor(&self) -> f64 {
        -1.0 / (4.0 * PI * PI)
    }
}
