use std::collections::HashMap;

use super::control_field::Segment;
use crate::error::Result;
use crate::special_fn::{kernel_first_moment, kernel_panel_moments, kernel_primitive};

/// Memoized `∫_0^x k_λ` and `∫_0^x τ k_λ` for one mode.
pub(crate) struct KernelTable {
    alpha: f64,
    lambda: f64,
    cache: HashMap<u64, (f64, f64)>,
}

impl KernelTable {
    pub(crate) fn new(alpha: f64, lambda: f64) -> Self {
        Self {
            alpha,
            lambda,
            cache: HashMap::new(),
        }
    }

    fn primitives(&mut self, x: f64) -> Result<(f64, f64)> {
        if x <= 0.0 {
            return Ok((0.0, 0.0));
        }
        if let Some(&v) = self.cache.get(&x.to_bits()) {
            return Ok(v);
        }
        let v = (
            kernel_primitive(self.alpha, self.lambda, x)?,
            kernel_first_moment(self.alpha, self.lambda, x)?,
        );
        self.cache.insert(x.to_bits(), v);
        Ok(v)
    }

    /// `∫_0^t ψ(t - τ) k_λ(τ) dτ` for piecewise-linear `ψ`, exact.
    pub(crate) fn response(&mut self, segments: &[Segment], t: f64) -> Result<f64> {
        let mut total = 0.0;
        for s in segments {
            if s.a >= t {
                continue;
            }
            let end = s.b.min(t);
            // τ runs over [t - end, t - a]; ψ(t - τ) = va + slope (t - a - τ)
            let (t0, t1) = (t - end, t - s.a);
            let (m0, m1) = if self.alpha == 1.0 {
                kernel_panel_moments(1.0, self.lambda, t0, t1)?
            } else {
                let (p0, q0) = self.primitives(t0)?;
                let (p1, q1) = self.primitives(t1)?;
                (p1 - p0, q1 - q0)
            };
            let slope = (s.vb - s.va) / (s.b - s.a);
            total += s.va * m0 + slope * (t1 * m0 - m1);
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_response_of_a_ramp() {
        // ψ(t) = t on (0, 1): ∫_0^1 (1 - τ) e^{-λτ} dτ = (λ - 1 + e^{-λ}) / λ²
        let mut k = KernelTable::new(1.0, 3.0);
        let seg = [Segment { a: 0.0, b: 1.0, va: 0.0, vb: 1.0 }];
        let got = k.response(&seg, 1.0).unwrap();
        let want = (3.0 - 1.0 + (-3.0f64).exp()) / 9.0;
        assert!((got - want).abs() < 1e-15);
    }

    #[test]
    fn fractional_response_matches_quadrature() {
        let (alpha, lambda) = (0.6, 4.0);
        let mut k = KernelTable::new(alpha, lambda);
        let seg = [
            Segment { a: 0.2, b: 0.5, va: 0.0, vb: 1.0 },
            Segment { a: 0.5, b: 0.9, va: 1.0, vb: 0.3 },
        ];
        let t = 0.8;
        let psi = |u: f64| {
            if u < 0.2 || u > 0.9 {
                0.0
            } else if u <= 0.5 {
                (u - 0.2) / 0.3
            } else {
                1.0 - 0.7 * (u - 0.5) / 0.4
            }
        };
        let f = |tau: f64| psi(t - tau) * crate::special_fn::ml_time_kernel(alpha, lambda, tau).unwrap();
        // τ = u^{1/α} removes the endpoint singularity
        let g = |u: f64| {
            let tau = u.powf(1.0 / alpha);
            f(tau) * tau.powf(1.0 - alpha) / alpha
        };
        let want = quadrature::integrate(g, 0.0, 0.3f64.powf(alpha), 1e-14).integral
            + quadrature::integrate(f, 0.3, 0.6, 1e-14).integral;
        let got = k.response(&seg, t).unwrap();
        assert!(((got - want) / want).abs() < 1e-9, "{got} vs {want}");
    }
}
