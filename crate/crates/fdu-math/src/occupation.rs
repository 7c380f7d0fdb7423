use crate::error::{Error, Result};

fn check(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::invalid(format!(
            "occupation argument x must be > 0 (got {x})"
        )));
    }
    Ok(x)
}

/// Planck occupation n(x) = 1/(eˣ − 1). Returns 0 once eˣ overflows.
pub fn planck_occupation(x: f64) -> Result<f64> {
    let x = check(x)?;
    Ok(1.0 / x.exp_m1())
}

/// 1 + n(x), evaluated as 1/(1 − e⁻ˣ) to keep full precision at large x.
pub fn planck_occupation_plus_one(x: f64) -> Result<f64> {
    let x = check(x)?;
    Ok(-1.0 / (-x).exp_m1())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_value() {
        let want = 0.581_976_706_869_326_4;
        assert!((planck_occupation(1.0).unwrap() - want).abs() < 1e-16);
    }

    #[test]
    fn large_argument_underflows_to_zero() {
        assert_eq!(planck_occupation(800.0).unwrap(), 0.0);
        assert_eq!(planck_occupation_plus_one(800.0).unwrap(), 1.0);
        assert!(planck_occupation(700.0).unwrap() > 0.0);
    }

    #[test]
    fn small_argument_is_accurate() {
        let x = 1e-10;
        let n = planck_occupation(x).unwrap();
        assert!((n * x - (1.0 - x / 2.0)).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(planck_occupation(0.0).is_err());
        assert!(planck_occupation(-1.0).is_err());
        assert!(planck_occupation(f64::NAN).is_err());
        assert!(planck_occupation_plus_one(0.0).is_err());
    }
}
