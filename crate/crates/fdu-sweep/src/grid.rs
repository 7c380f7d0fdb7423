use fdu_math::{Error, Result};

/// `n` evenly spaced points from `a` to `b`, both included exactly.
pub fn linear_grid(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    check(a, b, n)?;
    if n == 1 {
        return Ok(vec![a]);
    }
    let last = (n - 1) as f64;
    let mut g: Vec<f64> = (0..n).map(|i| a + (b - a) * (i as f64 / last)).collect();
    g[n - 1] = b;
    validate_grid(&g)?;
    Ok(g)
}

/// `n` logarithmically spaced points from `a` to `b` (both > 0), both
/// included exactly.
pub fn log_grid(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    check(a, b, n)?;
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::invalid(format!("log grid needs positive endpoints (got {a}..{b})")));
    }
    let mut g: Vec<f64> = linear_grid(a.ln(), b.ln(), n)?.into_iter().map(f64::exp).collect();
    g[0] = a;
    g[n - 1] = b;
    validate_grid(&g)?;
    Ok(g)
}

fn check(a: f64, b: f64, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("grid needs at least one point"));
    }
    if !(a.is_finite() && b.is_finite()) || (n > 1 && a == b) {
        return Err(Error::invalid(format!("grid endpoints must be finite and distinct (got {a}..{b})")));
    }
    Ok(())
}

/// Grids must be non-empty, finite and strictly monotone.
pub fn validate_grid(g: &[f64]) -> Result<()> {
    if g.is_empty() {
        return Err(Error::invalid("grid is empty"));
    }
    if g.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid("grid values must be finite"));
    }
    let up = g.windows(2).all(|w| w[1] > w[0]);
    let down = g.windows(2).all(|w| w[1] < w[0]);
    if !(up || down) {
        return Err(Error::invalid("grid must be strictly monotone"));
    }
    Ok(())
}
