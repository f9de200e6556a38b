//! The relaxation kernel `k_λ(t) = t^{α-1} E_{α,α}(-λ t^α)` and its moments.

use super::mittag_leffler::{mittag_leffler, MlParams};
use crate::error::{domain, Result};

fn check(alpha: f64, lambda: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(domain(format!(
            "time order must lie in (0, 1], got {alpha}"
        )));
    }
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(domain(format!(
            "decay rate must be non-negative, got {lambda}"
        )));
    }
    Ok(())
}

/// `t^{α-1} E_{α,α}(-λ t^α)` for `t > 0`.
pub fn ml_time_kernel(alpha: f64, lambda: f64, t: f64) -> Result<f64> {
    check(alpha, lambda)?;
    if !(t > 0.0) {
        return Err(domain(format!("kernel evaluated at t = {t} <= 0")));
    }
    if alpha == 1.0 {
        return Ok((-lambda * t).exp());
    }
    let ta = t.powf(alpha);
    Ok(t.powf(alpha - 1.0) * mittag_leffler(MlParams { alpha, beta: alpha }, -lambda * ta)?)
}

/// `E_{α,1}(-λ t^α)`, the relaxation function; `1` at `t = 0`.
pub fn relaxation(alpha: f64, lambda: f64, t: f64) -> Result<f64> {
    check(alpha, lambda)?;
    if t < 0.0 {
        return Err(domain(format!("relaxation evaluated at t = {t} < 0")));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    mittag_leffler(MlParams { alpha, beta: 1.0 }, -lambda * t.powf(alpha))
}

/// `∫_0^x k_λ(τ) dτ = x^α E_{α,α+1}(-λ x^α)`.
pub fn kernel_primitive(alpha: f64, lambda: f64, x: f64) -> Result<f64> {
    check(alpha, lambda)?;
    if x <= 0.0 {
        return Ok(0.0);
    }
    if alpha == 1.0 {
        if lambda == 0.0 {
            return Ok(x);
        }
        return Ok(-(-lambda * x).exp_m1() / lambda);
    }
    let xa = x.powf(alpha);
    Ok(xa
        * mittag_leffler(
            MlParams {
                alpha,
                beta: alpha + 1.0,
            },
            -lambda * xa,
        )?)
}

/// `∫_0^x τ k_λ(τ) dτ = x^{α+1} (E_{α,α+1} - E_{α,α+2})(-λ x^α)`.
pub fn kernel_first_moment(alpha: f64, lambda: f64, x: f64) -> Result<f64> {
    check(alpha, lambda)?;
    if x <= 0.0 {
        return Ok(0.0);
    }
    let xa = x.powf(alpha);
    let z = -lambda * xa;
    let e1 = mittag_leffler(
        MlParams {
            alpha,
            beta: alpha + 1.0,
        },
        z,
    )?;
    let e2 = mittag_leffler(
        MlParams {
            alpha,
            beta: alpha + 2.0,
        },
        z,
    )?;
    Ok(x * xa * (e1 - e2))
}

/// `(∫_a^b k_λ, ∫_a^b τ k_λ)` for `0 <= a <= b`.
pub fn kernel_panel_moments(alpha: f64, lambda: f64, a: f64, b: f64) -> Result<(f64, f64)> {
    if b <= a {
        return Ok((0.0, 0.0));
    }
    if alpha == 1.0 && lambda > 0.0 {
        check(alpha, lambda)?;
        return Ok(exponential_panel(lambda, a, b));
    }
    let m0 = kernel_primitive(alpha, lambda, b)? - kernel_primitive(alpha, lambda, a)?;
    let m1 = kernel_first_moment(alpha, lambda, b)? - kernel_first_moment(alpha, lambda, a)?;
    Ok((m0, m1))
}

/// Exponential panel moments without the cancellation of primitive
/// differences: `∫_a^b τ e^{-λτ} = a m0 + e^{-λa} ∫_0^Δ u e^{-λu} du`.
fn exponential_panel(lambda: f64, a: f64, b: f64) -> (f64, f64) {
    let x = lambda * (b - a);
    let decay = (-lambda * a).exp();
    let m0 = decay * -(-x).exp_m1() / lambda;
    // 1 - e^{-x}(1 + x)
    let q = if x < 0.5 {
        let mut term = x;
        let mut sum = 0.0;
        for k in 2..30 {
            term *= -x / k as f64;
            sum += (k - 1) as f64 * term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        -sum
    } else {
        -(-x).exp_m1() - x * (-x).exp()
    };
    (m0, a * m0 + decay * q / (lambda * lambda))
}
