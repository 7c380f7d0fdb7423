//! Polynomial (Richardson) extrapolation to ε = 0 by Neville's scheme.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolated {
    pub value: f64,
    /// Disagreement between the two highest-order estimates.
    pub residual: f64,
    /// Σ|wᵢ| for the Lagrange weights of the final estimate; multiplies the
    /// input errors.
    pub amplification: f64,
}

/// Extrapolates values `y` sampled at distinct `x` to x = 0.
pub fn to_zero(x: &[f64], y: &[f64]) -> Extrapolated {
    let n = x.len();
    assert!(n >= 2 && y.len() == n);
    let value = neville(x, y);
    // Lower-order estimates that drop the coarsest or the finest sample.
    let residual = (value - neville(&x[1..], &y[1..]))
        .abs()
        .max((value - neville(&x[..n - 1], &y[..n - 1])).abs());
    let amplification = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i)
                .map(|j| x[j] / (x[j] - x[i]))
                .product::<f64>()
                .abs()
        })
        .sum();
    Extrapolated { value, residual, amplification }
}

fn neville(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    let mut t = y.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let (xa, xb) = (x[i - j], x[i]);
            t[i] = (xa * t[i] - xb * t[i - 1]) / (xa - xb);
        }
    }
    t[n - 1]
}
