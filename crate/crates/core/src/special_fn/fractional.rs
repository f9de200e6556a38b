//! Product-quadrature Riemann-Liouville integrals and the L1 Caputo
//! derivative on a [`TimeGrid`].
//!
//! Samples are interpolated piecewise linearly and integrated exactly
//! against the kernel `(t - τ)^{order-1}`. A non-finite sample at the
//! integrable end (`t = 0` for left integrals, `t = T` for right ones) marks
//! a power-law singularity `τ^{-ν}`, with `ν` fitted to the two neighbouring
//! samples. The weight `τ^{-ν}` is then factored out on every panel, the
//! remainder `τ^ν f` is interpolated linearly and the panel moments of
//! `(t - τ)^{order-1} τ^{m-ν}` come from the incomplete beta function.

use statrs::function::beta::{beta, beta_reg};

use super::gamma::rgamma;
use super::grid::TimeGrid;
use crate::error::{domain, Error, Result};

fn check_order(order: f64) -> Result<()> {
    if !(order > 0.0 && order < 1.0) {
        return Err(domain(format!(
            "fractional order must lie in (0, 1), got {order}"
        )));
    }
    Ok(())
}

fn check_samples(grid: &TimeGrid, samples: &[f64]) -> Result<()> {
    if samples.len() != grid.len() {
        return Err(Error::Dimension(format!(
            "{} samples on a grid of {} nodes",
            samples.len(),
            grid.len()
        )));
    }
    Ok(())
}

/// Exponent `ν` of `f(τ) = c τ^{-ν}` through `(t1, f1)` and `(t2, f2)`.
fn power_law_exponent(t1: f64, f1: f64, t2: f64, f2: f64) -> Result<f64> {
    if !(f1.is_finite() && f2.is_finite()) || f1 == 0.0 || f1.signum() != f2.signum() {
        return Err(Error::InvalidData(
            "singular endpoint needs two finite same-signed neighbouring samples".into(),
        ));
    }
    let nu = (f1 / f2).ln() / (t2 / t1).ln();
    if !(nu < 1.0) {
        return Err(Error::InvalidData(format!(
            "endpoint singularity of order {nu} is not integrable"
        )));
    }
    Ok(nu)
}

/// `B(x; p, q)` differences `B(xb) - B(xa)` for `0 <= xa <= xb <= 1`,
/// switching to the complementary form near 1 where the direct difference cancels.
fn incomplete_beta_diff(p: f64, q: f64, xa: f64, xb: f64) -> f64 {
    let complete = beta(p, q);
    let reg = |x: f64| -> f64 {
        if x <= 0.0 {
            0.0
        } else if x >= 1.0 {
            1.0
        } else {
            beta_reg(p, q, x)
        }
    };
    let creg = |y: f64| -> f64 {
        if y <= 0.0 {
            0.0
        } else if y >= 1.0 {
            1.0
        } else {
            beta_reg(q, p, y)
        }
    };
    if xa > 0.5 {
        complete * (creg(1.0 - xa) - creg(1.0 - xb))
    } else {
        complete * (reg(xb) - reg(xa))
    }
}

/// Moments `∫_{ta}^{tb} (t - τ)^{β-1} τ^{m-ν} dτ`, `m = 0, 1, 2`, for `t >= tb`.
fn weighted_moments(t: f64, ta: f64, tb: f64, nu: f64, order: f64) -> [f64; 3] {
    let xa = ta / t;
    let xb = (tb / t).min(1.0);
    let mut m = [0.0; 3];
    for (k, mk) in m.iter_mut().enumerate() {
        let e = k as f64;
        *mk = t.powf(order + e - nu) * incomplete_beta_diff(1.0 + e - nu, order, xa, xb);
    }
    m
}

/// Discrete `I_{0,t}^{order} f` at every grid node.
pub fn left_frac_integral(grid: &TimeGrid, samples: &[f64], order: f64) -> Result<Vec<f64>> {
    check_order(order)?;
    check_samples(grid, samples)?;
    let t = grid.nodes();
    let n = t.len();
    let singular = !samples[0].is_finite();
    let nu = if singular {
        if n < 3 {
            return Err(Error::InvalidData(
                "singular data needs at least three nodes".into(),
            ));
        }
        Some(power_law_exponent(t[1], samples[1], t[2], samples[2])?)
    } else {
        None
    };
    if let Some(bad) = samples[1..].iter().position(|f| !f.is_finite()) {
        return Err(Error::InvalidData(format!(
            "non-finite sample at node {}",
            bad + 1
        )));
    }
    let scale = rgamma(order);
    let bp = order + 1.0;
    let mut out = vec![0.0; n];
    match nu {
        None => {
            for k in 1..n {
                let tk = t[k];
                let mut acc = 0.0;
                for j in 1..=k {
                    let a = tk - t[j - 1];
                    let b = tk - t[j];
                    let h = t[j] - t[j - 1];
                    let m0 = (a.powf(order) - b.powf(order)) / order;
                    let m1 = (a.powf(bp) - b.powf(bp)) / bp;
                    let w_right = (a * m0 - m1) / h;
                    let w_left = (m1 - b * m0) / h;
                    acc += w_left * samples[j - 1] + w_right * samples[j];
                }
                out[k] = scale * acc;
            }
        }
        Some(nu) => {
            // g = τ^ν f is regular; extrapolate it to τ = 0 through the next two nodes
            let mut g: Vec<f64> = (0..n).map(|j| t[j].powf(nu) * samples[j]).collect();
            g[0] = g[1] - t[1] * (g[2] - g[1]) / (t[2] - t[1]);
            return left_frac_integral_weighted(grid, &g, order, nu);
        }
    }
    Ok(out)
}

/// Discrete `I_{0,t}^{order} f` for `f(τ) = τ^{-ν} g(τ)` with a known
/// exponent `ν < 1`, given the regular factor `g` at every node (including
/// `τ = 0`). On each panel `g` is interpolated by the quadratic through the
/// panel ends and the next node (the previous one on the last panel), so the
/// rule is exact for piecewise-quadratic `g`.
pub fn left_frac_integral_weighted(
    grid: &TimeGrid,
    g: &[f64],
    order: f64,
    nu: f64,
) -> Result<Vec<f64>> {
    check_order(order)?;
    check_samples(grid, g)?;
    if !(nu < 1.0) || !nu.is_finite() {
        return Err(domain(format!("weight exponent must be below 1, got {nu}")));
    }
    if let Some(bad) = g.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidData(format!(
            "non-finite sample at node {bad}"
        )));
    }
    let t = grid.nodes();
    let n = t.len();
    if n < 3 {
        return Err(Error::InvalidData(
            "weighted rule needs at least three nodes".into(),
        ));
    }
    let scale = rgamma(order);
    let mut out = vec![0.0; n];
    for k in 1..n {
        let tk = t[k];
        let mut acc = 0.0;
        for j in 1..=k {
            let c = if j + 1 < n { j + 1 } else { j - 2 };
            let (ta, tb, tc) = (t[j - 1], t[j], t[c]);
            let [m0, m1, m2] = weighted_moments(tk, ta, tb, nu, order);
            // ∫ w(τ)(τ - p)(τ - q) dτ
            let quad = |p: f64, q: f64| m2 - (p + q) * m1 + p * q * m0;
            acc += g[j - 1] * quad(tb, tc) / ((ta - tb) * (ta - tc))
                + g[j] * quad(ta, tc) / ((tb - ta) * (tb - tc))
                + g[c] * quad(ta, tb) / ((tc - ta) * (tc - tb));
        }
        out[k] = scale * acc;
    }
    Ok(out)
}

/// Discrete `I_{t,T}^{order} f` at every grid node.
pub fn right_frac_integral(grid: &TimeGrid, samples: &[f64], order: f64) -> Result<Vec<f64>> {
    check_samples(grid, samples)?;
    let mirrored = grid.reflected();
    let reversed: Vec<f64> = samples.iter().rev().copied().collect();
    let mut out = left_frac_integral(&mirrored, &reversed, order)?;
    out.reverse();
    Ok(out)
}

/// L1 discretisation of the Caputo derivative `D_t^α (f - f(0))`.
///
/// For `α = 1` this is the backward difference quotient (forward at `t_0`).
pub fn caputo_derivative(grid: &TimeGrid, samples: &[f64], alpha: f64) -> Result<Vec<f64>> {
    check_samples(grid, samples)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(domain(format!(
            "Caputo order must lie in (0, 1], got {alpha}"
        )));
    }
    let t = grid.nodes();
    let n = t.len();
    let mut out = vec![0.0; n];
    if alpha == 1.0 {
        for k in 1..n {
            out[k] = (samples[k] - samples[k - 1]) / (t[k] - t[k - 1]);
        }
        out[0] = (samples[1] - samples[0]) / (t[1] - t[0]);
        return Ok(out);
    }
    let e = 1.0 - alpha;
    let scale = rgamma(2.0 - alpha);
    let slopes: Vec<f64> = (1..n)
        .map(|j| (samples[j] - samples[j - 1]) / (t[j] - t[j - 1]))
        .collect();
    for k in 1..n {
        let mut acc = 0.0;
        for j in 1..=k {
            let s = slopes[j - 1];
            if s == 0.0 {
                continue;
            }
            acc += s * ((t[k] - t[j - 1]).powf(e) - (t[k] - t[j]).powf(e));
        }
        out[k] = scale * acc;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_fn::gamma;

    #[test]
    fn zero_data_gives_zero() {
        let g = TimeGrid::graded(1.0, 20, 2.0).unwrap();
        let z = vec![0.0; g.len()];
        assert!(left_frac_integral(&g, &z, 0.4)
            .unwrap()
            .iter()
            .all(|&v| v == 0.0));
        assert!(right_frac_integral(&g, &z, 0.4)
            .unwrap()
            .iter()
            .all(|&v| v == 0.0));
    }

    #[test]
    fn constant_data_is_integrated_exactly() {
        let g = TimeGrid::graded(2.0, 17, 1.7).unwrap();
        let ones = vec![1.0; g.len()];
        let left = left_frac_integral(&g, &ones, 0.5).unwrap();
        let right = right_frac_integral(&g, &ones, 0.5).unwrap();
        let c = 1.0 / gamma(1.5).unwrap();
        for (k, &t) in g.nodes().iter().enumerate() {
            assert!((left[k] - c * t.sqrt()).abs() < 1e-13);
            assert!((right[k] - c * (2.0 - t).sqrt()).abs() < 1e-13);
        }
    }

    #[test]
    fn linear_data_is_integrated_exactly() {
        // I^β t = t^{1+β} / Γ(2+β)
        let g = TimeGrid::uniform(1.0, 9).unwrap();
        let f: Vec<f64> = g.nodes().to_vec();
        let out = left_frac_integral(&g, &f, 0.3).unwrap();
        for (k, &t) in g.nodes().iter().enumerate() {
            let want = t.powf(1.3) / gamma(2.3).unwrap();
            assert!((out[k] - want).abs() < 1e-13);
        }
    }

    #[test]
    fn pure_power_singularity_is_exact() {
        // f = τ^{-1/2}: I^{1/2} f = Γ(1/2)/Γ(1) = √π, constant
        let g = TimeGrid::graded(1.0, 30, 4.0).unwrap();
        let mut f: Vec<f64> = g.nodes().iter().map(|t| t.powf(-0.5)).collect();
        f[0] = f64::INFINITY;
        let out = left_frac_integral(&g, &f, 0.5).unwrap();
        for &v in &out[1..] {
            assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn weighted_linear_singular_data_is_exact() {
        // f = τ^{-0.3}(1 + τ): I^{0.4} f = Γ(0.7)/Γ(1.1) t^{0.1} + Γ(1.7)/Γ(2.1) t^{1.1}
        let g = TimeGrid::graded(1.5, 25, 2.0).unwrap();
        let reg: Vec<f64> = g.nodes().iter().map(|t| 1.0 + t).collect();
        let out = left_frac_integral_weighted(&g, &reg, 0.4, 0.3).unwrap();
        let c0 = gamma(0.7).unwrap() / gamma(1.1).unwrap();
        let c1 = gamma(1.7).unwrap() / gamma(2.1).unwrap();
        for (k, &t) in g.nodes().iter().enumerate().skip(1) {
            let want = c0 * t.powf(0.1) + c1 * t.powf(1.1);
            assert!((out[k] - want).abs() < 1e-12 * want, "k={k}");
        }
    }

    #[test]
    fn right_integral_mirrors_left() {
        // I_{t,T}^{0.5} of (T - τ)^{-1/2} is √π
        let g = TimeGrid::graded_toward_end(1.0, 20, 2.0).unwrap();
        let mut f: Vec<f64> = g.nodes().iter().map(|t| (1.0 - t).powf(-0.5)).collect();
        let last = f.len() - 1;
        f[last] = f64::INFINITY;
        let out = right_frac_integral(&g, &f, 0.5).unwrap();
        for &v in &out[..last] {
            assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn caputo_of_constant_is_zero() {
        let g = TimeGrid::graded(1.0, 25, 2.0).unwrap();
        let c = vec![3.7; g.len()];
        for alpha in [0.3, 0.7, 1.0] {
            assert!(caputo_derivative(&g, &c, alpha)
                .unwrap()
                .iter()
                .all(|&v| v == 0.0));
        }
    }

    #[test]
    fn caputo_of_identity_at_alpha_one() {
        let g = TimeGrid::graded(1.0, 10, 2.0).unwrap();
        let out = caputo_derivative(&g, g.nodes(), 1.0).unwrap();
        assert!(out.iter().all(|&v| (v - 1.0).abs() < 1e-13));
    }

    #[test]
    fn caputo_is_exact_on_linear_data() {
        // D^α t = t^{1-α}/Γ(2-α)
        let g = TimeGrid::graded(1.0, 12, 1.5).unwrap();
        let out = caputo_derivative(&g, g.nodes(), 0.6).unwrap();
        for (k, &t) in g.nodes().iter().enumerate() {
            let want = t.powf(0.4) / gamma(1.4).unwrap();
            assert!((out[k] - want).abs() < 1e-13);
        }
    }

    #[test]
    fn order_out_of_range() {
        let g = TimeGrid::uniform(1.0, 4).unwrap();
        let f = vec![1.0; 5];
        assert!(left_frac_integral(&g, &f, 1.0).is_err());
        assert!(left_frac_integral(&g, &f, 0.0).is_err());
        assert!(caputo_derivative(&g, &f, 1.2).is_err());
    }
}
