//! Laplace-transform self-test of the Mittag-Leffler evaluator:
//! `∫_0^∞ e^{-λt} t^{α+β-1} E'_{α,β}(-ω t^α) dt = λ^{α-β} / (λ^α + ω)²`,
//! where `E'` is the derivative in the argument. With `E_{α,β}` itself in
//! place of `E'` the identity only holds at `α = β = 1`.

use super::mittag_leffler::{mittag_leffler_derivative, MlParams};
use crate::error::{domain, Result};
use crate::quad::integrate_adaptive;

/// Closed-form right-hand side.
pub fn laplace_closed_form(alpha: f64, beta: f64, omega: f64, lam: f64) -> f64 {
    lam.powf(alpha - beta) / (lam.powf(alpha) + omega).powi(2)
}

/// `|quadrature - closed form|` for the Laplace transform of
/// `t^{α+β-1} E'_{α,β}(-ω t^α)`.
pub fn laplace_transform_residual(alpha: f64, beta: f64, omega: f64, lam: f64) -> Result<f64> {
    let p = MlParams::new(alpha, beta)?;
    if !(omega > 0.0 && lam > omega.powf(1.0 / alpha)) {
        return Err(domain(format!(
            "Laplace transform needs lambda > omega^(1/alpha) > 0 (lambda = {lam}, omega = {omega})"
        )));
    }
    let exponent = alpha + beta - 1.0;
    // e^{-λt} t^{α+β-1} is below 1e-25 of its peak beyond t_max
    let t_max = (60.0 + exponent.max(0.0) * (60.0 / lam).max(1.0).ln()) / lam;
    let integrand = |t: f64| {
        if t <= 0.0 {
            return 0.0;
        }
        let e = mittag_leffler_derivative(p, -omega * t.powf(alpha)).unwrap_or(f64::NAN);
        (-lam * t).exp() * t.powf(exponent) * e
    };
    let exact = laplace_closed_form(alpha, beta, omega, lam);
    let split = 1.0 / lam;
    let value = integrate_adaptive(integrand, &[0.0, split, t_max], 1e-15 * exact.abs(), 1e-13)?;
    Ok((value - exact).abs())
}
