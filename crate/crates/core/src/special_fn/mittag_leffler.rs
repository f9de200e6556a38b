//! Two-parameter Mittag-Leffler function `E_{α,β}(z) = Σ z^n / Γ(αn + β)`
//! on the real line.
//!
//! Three regimes are tried in order, each accepted only when its own error
//! estimate meets the relative tolerance:
//!
//! 1. the Taylor series, accepted when the cancellation estimate
//!    `ε · Σ|terms|` is small relative to the sum;
//! 2. the algebraic asymptotic expansion on the negative axis
//!    `E_{α,β}(-x) ~ Σ_{k≥1} (-1)^{k+1} x^{-k} / Γ(β - αk)`, truncated at its
//!    smallest term (measured by the envelope `Γ(1-y)/π` of `1/Γ(y)`) and
//!    accepted when that term is below tolerance;
//! 3. for `0 < α < 1`, the real integral representation valid on the
//!    negative axis (`|arg z| = π > απ`, `β < 1 + α`)
//!
//!    ```text
//!    E_{α,β}(-x) = 1/(απ) ∫_0^∞ χ^{(1-β)/α} exp(-χ^{1/α})
//!                  · (χ sin(π(1-β)) + x sin(π(1-β+α))) / (χ² + 2χx cos(απ) + x²) dχ
//!    ```
//!
//!    with `β > 1 + α/2` reduced through `E_{α,β}(z) = (E_{α,β-α}(z) - 1/Γ(β-α)) / z`.
//!
//! `α = 1` is handled through the exponential and its incomplete-gamma
//! relatives.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::gamma::{ln_gamma_abs, rgamma};
use crate::error::{domain, Error, Result};
use crate::quad::integrate_adaptive;

/// Parameters `(α, β)` of `E_{α,β}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MlParams {
    pub alpha: f64,
    pub beta: f64,
}

impl MlParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(domain(format!(
                "Mittag-Leffler order must be positive, got {alpha}"
            )));
        }
        if !beta.is_finite() {
            return Err(domain("Mittag-Leffler beta must be finite"));
        }
        Ok(Self { alpha, beta })
    }
}

/// Tolerances of the evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MlConfig {
    /// Largest `|z|` on the negative axis for which the Taylor series is tried.
    pub series_radius: f64,
    /// Target relative accuracy.
    pub rel_tol: f64,
}

impl Default for MlConfig {
    fn default() -> Self {
        Self {
            series_radius: 10.0,
            rel_tol: 1e-14,
        }
    }
}

/// Which evaluation route produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    Exact,
    Taylor,
    Asymptotic,
    Integral,
}

const EPS: f64 = f64::EPSILON;
const MAX_TERMS: usize = 5000;

/// `E_{α,β}(z)` with default tolerances.
pub fn mittag_leffler(p: MlParams, z: f64) -> Result<f64> {
    mittag_leffler_with(p, z, &MlConfig::default()).map(|(v, _)| v)
}

/// `E_{α,β}(z)` and the regime that produced it.
pub fn mittag_leffler_with(p: MlParams, z: f64, cfg: &MlConfig) -> Result<(f64, Regime)> {
    let MlParams { alpha, beta } = p;
    if !(alpha > 0.0) {
        return Err(domain(format!(
            "Mittag-Leffler order must be positive, got {alpha}"
        )));
    }
    if !z.is_finite() {
        return Err(domain("Mittag-Leffler argument must be finite"));
    }
    if z == 0.0 {
        return Ok((rgamma(beta), Regime::Exact));
    }
    if alpha == 1.0 {
        return ml_alpha_one(beta, z, cfg);
    }
    if z > 0.0 || alpha > 1.0 || -z <= cfg.series_radius {
        if let Some(v) = taylor(alpha, beta, z, cfg.rel_tol) {
            return Ok((v, Regime::Taylor));
        }
    }
    if alpha > 1.0 || z > 0.0 {
        return Err(Error::NonConvergence {
            what: "Mittag-Leffler series",
            detail: format!("alpha = {alpha}, beta = {beta}, z = {z}"),
        });
    }
    let x = -z;
    if x >= 1.0 {
        if let Some(v) = asymptotic(alpha, beta, x, cfg.rel_tol) {
            return Ok((v, Regime::Asymptotic));
        }
    }
    integral(alpha, beta, x, cfg).map(|v| (v, Regime::Integral))
}

/// `d/dz E_{α,β}(z) = (E_{α,α+β-1}(z) - (β-1) E_{α,α+β}(z)) / α`.
pub fn mittag_leffler_derivative(p: MlParams, z: f64) -> Result<f64> {
    let MlParams { alpha, beta } = p;
    let lower = mittag_leffler(MlParams::new(alpha, alpha + beta - 1.0)?, z)?;
    let upper = mittag_leffler(MlParams::new(alpha, alpha + beta)?, z)?;
    Ok((lower - (beta - 1.0) * upper) / alpha)
}

/// Empirical constant of the decay bound `|E_{α,β}(-x)| ≤ C / (1 + x)`:
/// the maximum of `(1 + x)|E_{α,β}(-x)|` over `samples` log-spaced points in
/// `[0, x_max]` (plus `x = 0`).
pub fn decay_constant(p: MlParams, x_max: f64, samples: usize) -> Result<f64> {
    if !(x_max > 0.0) || samples < 2 {
        return Err(domain(
            "decay scan needs x_max > 0 and at least two samples",
        ));
    }
    let lo = (1e-3f64).min(x_max).ln();
    let hi = x_max.ln();
    let mut c = rgamma(p.beta).abs();
    for i in 0..samples {
        let x = (lo + (hi - lo) * i as f64 / (samples - 1) as f64).exp();
        c = c.max((1.0 + x) * mittag_leffler(p, -x)?.abs());
    }
    Ok(c)
}

/// Taylor series with a cancellation check. `None` if the result cannot be
/// trusted to `rel_tol`.
fn taylor(alpha: f64, beta: f64, z: f64, rel_tol: f64) -> Option<f64> {
    let ln_z = z.abs().ln();
    let mut sum = 0.0f64;
    let mut abs_sum = 0.0f64;
    let mut prev = f64::INFINITY;
    for n in 0..MAX_TERMS {
        let arg = alpha * n as f64 + beta;
        let t = if arg <= 0.0 && arg == arg.floor() {
            0.0
        } else if arg < 170.0 && n < 300 {
            z.powi(n as i32) * rgamma(arg)
        } else {
            // arg > 0 here, so Γ(arg) > 0
            let sign = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
            sign * (n as f64 * ln_z - ln_gamma_abs(arg)).exp()
        };
        if !t.is_finite() {
            return None;
        }
        sum += t;
        abs_sum += t.abs();
        if z < 0.0 && abs_sum * EPS > 1e3 * rel_tol {
            // |E| on the negative axis is O(1); this sum can no longer be accurate
            return None;
        }
        if n > 2 && t.abs() <= prev && t.abs() <= 1e-18 * sum.abs() {
            break;
        }
        if t != 0.0 {
            prev = t.abs();
        }
        if n == MAX_TERMS - 1 {
            return None;
        }
    }
    if !sum.is_finite() || abs_sum * 4.0 * EPS > rel_tol * sum.abs() {
        return None;
    }
    Some(sum)
}

/// `(sign, ln|1/Γ(y)|)`, or `None` at a pole of Γ.
fn rgamma_log(y: f64) -> Option<(f64, f64)> {
    if y <= 0.0 && y == y.floor() {
        return None;
    }
    if y > 0.0 {
        return Some((1.0, -ln_gamma_abs(y)));
    }
    // 1/Γ(y) = Γ(1-y) sin(πy) / π
    let s = (PI * y).sin();
    Some((s.signum(), ln_gamma_abs(1.0 - y) + s.abs().ln() - PI.ln()))
}

/// Magnitude envelope of `1/Γ(y)`, ignoring the oscillating `sin(πy)` factor
/// that makes individual terms accidentally small near the poles of Γ.
fn rgamma_envelope_log(y: f64) -> f64 {
    if y > 0.0 {
        -ln_gamma_abs(y)
    } else {
        ln_gamma_abs(1.0 - y) - PI.ln()
    }
}

/// Optimally truncated asymptotic series on the negative axis. The error is
/// bounded by the smallest envelope term.
fn asymptotic(alpha: f64, beta: f64, x: f64, rel_tol: f64) -> Option<f64> {
    let ln_x = x.ln();
    let mut sum = 0.0f64;
    let mut prev_env = f64::INFINITY;
    let mut remainder = f64::INFINITY;
    for k in 1..=400usize {
        let y = beta - alpha * k as f64;
        let env = (rgamma_envelope_log(y) - k as f64 * ln_x).exp();
        if env > prev_env {
            remainder = prev_env;
            break;
        }
        prev_env = env;
        if let Some((sign, ln_r)) = rgamma_log(y) {
            let alt = if k % 2 == 1 { 1.0 } else { -1.0 };
            sum += alt * sign * (ln_r - k as f64 * ln_x).exp();
        }
        if env <= 1e-18 * sum.abs() {
            remainder = env;
            break;
        }
    }
    if !sum.is_finite() || sum == 0.0 || remainder > rel_tol * sum.abs() {
        return None;
    }
    Some(sum)
}

/// Integral representation for `0 < α < 1`, `z = -x < 0`.
fn integral(alpha: f64, beta: f64, x: f64, cfg: &MlConfig) -> Result<f64> {
    // the representation degenerates as β → 1 + α; keep β at most 1 + α/2
    if beta > 1.0 + 0.5 * alpha {
        let lower = integral(alpha, beta - alpha, x, cfg)?;
        return Ok((lower - rgamma(beta - alpha)) / -x);
    }
    let ca = (alpha * PI).cos();
    let s1 = (PI * (1.0 - beta)).sin();
    let s2 = (PI * (1.0 - beta + alpha)).sin();
    let p = (1.0 - beta) / alpha;
    let inv_alpha = 1.0 / alpha;
    let norm = 1.0 / (alpha * PI);
    let kernel = move |chi: f64| {
        if chi <= 0.0 {
            return 0.0;
        }
        let num = chi * s1 + x * s2;
        let den = chi * chi + 2.0 * chi * x * ca + x * x;
        norm * chi.powf(p) * (-chi.powf(inv_alpha)).exp() * num / den
    };
    let upper = 60f64.powf(alpha);
    // χ = w^m removes the endpoint singularity χ^p when p < 0
    let m = if p < 0.0 { 1.0 / (1.0 + p) } else { 1.0 };
    let substituted = move |w: f64| {
        if m == 1.0 {
            kernel(w)
        } else {
            m * w.powf(m - 1.0) * kernel(w.powf(m))
        }
    };
    let w_upper = upper.powf(1.0 / m);
    let peak = x * (-ca).max(0.0);
    let mut breaks = vec![0.0];
    if peak > 0.0 && peak < upper {
        breaks.push(peak.powf(1.0 / m));
    }
    breaks.push(w_upper);
    let scale = 0.1 * (1.0 + x).powi(-2);
    let value = integrate_adaptive(substituted, &breaks, cfg.rel_tol * scale, cfg.rel_tol)?;
    Ok(value)
}

/// `α = 1`: `E_{1,1} = exp`, `E_{1,β}(z) = 1/Γ(β) ∫_0^1 exp(z(1 - w^{1/(β-1)})) dw`
/// for `β > 1`, and the upward recurrence for `β < 1`.
fn ml_alpha_one(beta: f64, z: f64, cfg: &MlConfig) -> Result<(f64, Regime)> {
    if beta == 1.0 {
        return Ok((z.exp(), Regime::Exact));
    }
    if beta == 2.0 {
        return Ok((z.exp_m1() / z, Regime::Exact));
    }
    if let Some(v) = taylor(1.0, beta, z, cfg.rel_tol) {
        return Ok((v, Regime::Taylor));
    }
    if beta == 3.0 && z.abs() >= 1.0 {
        return Ok(((z.exp_m1() - z) / (z * z), Regime::Exact));
    }
    if beta > 1.0 {
        // u = w^{1/(β-1)} in the Euler integral removes the (1-t)^{β-2} factor
        let e = 1.0 / (beta - 1.0);
        let f = move |w: f64| (z * (1.0 - w.powf(e))).exp();
        let scale = if z < 0.0 { 1.0 / (1.0 - z) } else { z.exp() };
        let v = integrate_adaptive(f, &[0.0, 0.5, 1.0], cfg.rel_tol * scale * 0.1, cfg.rel_tol)?;
        return Ok((rgamma(beta) * v, Regime::Integral));
    }
    let (upper, regime) = ml_alpha_one(beta + 1.0, z, cfg)?;
    Ok((rgamma(beta) + z * upper, regime))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ml(a: f64, b: f64, z: f64) -> f64 {
        mittag_leffler(MlParams::new(a, b).unwrap(), z).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn exponential_special_case() {
        assert!(rel(ml(1.0, 1.0, -2.0), 0.1353352832366127) < 1e-15);
        assert!(rel(ml(1.0, 2.0, -3.0), (1.0 - (-3f64).exp()) / 3.0) < 1e-14);
    }

    #[test]
    fn value_at_zero_is_reciprocal_gamma() {
        let want = 1.0 / crate::special_fn::gamma(1.3).unwrap();
        assert_eq!(ml(0.7, 1.3, 0.0), want);
    }

    #[test]
    fn regimes_are_selected() {
        let cfg = MlConfig::default();
        let p = MlParams::new(0.5, 1.0).unwrap();
        assert_eq!(
            mittag_leffler_with(p, -0.5, &cfg).unwrap().1,
            Regime::Taylor
        );
        assert_eq!(
            mittag_leffler_with(p, -50.0, &cfg).unwrap().1,
            Regime::Asymptotic
        );
        let p = MlParams::new(0.9, 1.0).unwrap();
        assert_eq!(
            mittag_leffler_with(p, -8.0, &cfg).unwrap().1,
            Regime::Integral
        );
    }

    #[test]
    fn regimes_agree_at_their_borders() {
        // force each route at overlapping arguments
        for &(a, b) in &[(0.5, 1.0), (0.7, 0.7), (0.3, 1.0), (0.8, 0.8)] {
            for &x in &[3.0, 6.0, 12.0] {
                let cfg = MlConfig::default();
                let via_int = integral(a, b, x, &cfg).unwrap();
                if let Some(asy) = asymptotic(a, b, x, 1e-10) {
                    assert!(rel(asy, via_int) < 1e-9, "a={a} b={b} x={x}");
                }
                if let Some(tay) = taylor(a, b, -x, 1e-10) {
                    assert!(rel(tay, via_int) < 1e-9, "a={a} b={b} x={x}");
                }
            }
        }
    }

    #[test]
    fn large_beta_uses_recurrence() {
        // E_{α,α+2}(-x) from its defining recurrence
        let (a, x) = (0.6, 7.0);
        let top = ml(a, a + 2.0, -x);
        let mid = ml(a, 2.0, -x);
        let want = (mid - rgamma(2.0)) / -x;
        assert!(rel(top, want) < 1e-12);
    }

    #[test]
    fn rejects_bad_order() {
        assert!(MlParams::new(0.0, 1.0).is_err());
        assert!(MlParams::new(-1.0, 1.0).is_err());
    }
}
