//! Gamma function wrappers with explicit pole handling.

use crate::error::{Error, Result};

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `Γ(x)`. Errors at the poles `0, -1, -2, …`.
pub fn gamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::GammaPole(x));
    }
    if x.is_nan() {
        return Err(crate::error::domain("gamma of NaN"));
    }
    // exact factorials for small positive integers
    if x == x.floor() && x <= 23.0 {
        return Ok((1..x as u64).fold(1.0, |acc, k| acc * k as f64));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// `1/Γ(x)`, which is entire: returns `0` at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_pole(x) {
        return 0.0;
    }
    if x > 171.0 {
        return (-ln_gamma_abs(x)).exp();
    }
    1.0 / gamma(x).expect("non-pole")
}

/// `ln|Γ(x)|` for `x` not a pole.
pub fn ln_gamma_abs(x: f64) -> f64 {
    if x > 0.0 {
        statrs::function::gamma::ln_gamma(x)
    } else {
        // reflection: |Γ(x)| = π / (|sin πx| Γ(1-x))
        let pi = std::f64::consts::PI;
        pi.ln() - (pi * x).sin().abs().ln() - statrs::function::gamma::ln_gamma(1.0 - x)
    }
}
