use std::f64::consts::PI;

use crate::error::Result;
use crate::units::{finite, positive, Acceleration, Energy, Length};

/// Below this value of |αz|·max(1, 2ΔE/α) the kernel is evaluated from its
/// Taylor expansion around z = 0.
const TAYLOR_SWITCH: f64 = 1e-6;

/// The image kernel
///
/// ```text
/// g(ΔE, α, z) = sin((2ΔE/α) asinh(αz)) / (4π z √(1 + α²z²))
/// ```
///
/// It is even in z and tends to ΔE/2π as z → 0.
pub fn g_kernel(de: Energy, alpha: Acceleration, z: Length) -> Result<f64> {
    let de = positive("dE", de.0)?;
    let alpha = positive("alpha", alpha.0)?;
    let z = finite("z", z.0)?;
    Ok(g_raw(de, alpha, z))
}

/// Unchecked kernel used on the hot paths. Inputs must be finite with
/// `de > 0` and `alpha > 0`.
#[inline]
pub(crate) fn g_raw(de: f64, alpha: f64, z: f64) -> f64 {
    let z = z.abs();
    let x = alpha * z;
    let kappa = 2.0 * de / alpha;
    if x * kappa.max(1.0) < TAYLOR_SWITCH {
        let q = de / (2.0 * PI);
        return q * (1.0 - x * x * (4.0 + kappa * kappa) / 6.0);
    }
    (kappa * x.asinh()).sin() / (4.0 * PI * z * 1f64.hypot(x))
}

/// Upper bound on |∂²g/∂z²| valid for every z ≠ 0:
/// (6 + 5κ + κ²) / (4π α z⁴) with κ = 2ΔE/α.
pub fn g_second_derivative_bound(de: f64, alpha: f64, z: f64) -> f64 {
    let kappa = 2.0 * de / alpha;
    let z2 = z * z;
    (6.0 + kappa * (5.0 + kappa)) / (4.0 * PI * alpha * z2 * z2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(de: f64, a: f64, z: f64) -> f64 {
        g_kernel(Energy(de), Acceleration(a), Length(z)).unwrap()
    }

    #[test]
    fn zero_argument_is_exact_limit() {
        assert_eq!(g(1.0, 4.0, 0.0), 1.0 / (2.0 * PI));
        assert_eq!(g(2.5, 0.3, 0.0), 2.5 / (2.0 * PI));
    }

    #[test]
    fn reference_value() {
        // 50-digit evaluation of the defining formula.
        let want = 0.082_600_854_437_233_1;
        assert!((g(1.0, 4.0, 0.3) - want).abs() < 1e-15);
    }

    #[test]
    fn taylor_and_direct_paths_agree_at_switch() {
        for &(de, a) in &[(1.0, 4.0), (1.0, 0.01), (3.0, 50.0), (0.2, 1.0)] {
            let kappa: f64 = 2.0 * de / a;
            let zs = TAYLOR_SWITCH / (a * kappa.max(1.0));
            let below = g_raw(de, a, zs * (1.0 - 1e-9));
            let x = a * zs;
            let direct = (kappa * x.asinh()).sin() / (4.0 * PI * zs * 1f64.hypot(x));
            assert!(((below - direct) / direct).abs() < 1e-12, "{de} {a}");
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(g_kernel(Energy(0.0), Acceleration(1.0), Length(1.0)).is_err());
        assert!(g_kernel(Energy(1.0), Acceleration(-1.0), Length(1.0)).is_err());
        assert!(g_kernel(Energy(1.0), Acceleration(1.0), Length(f64::NAN)).is_err());
        assert!(g_kernel(Energy(f64::INFINITY), Acceleration(1.0), Length(1.0)).is_err());
    }
}
