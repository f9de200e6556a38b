use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Time order `α ∈ (0, 1]`, space order `s ∈ (0, 1)` and horizon `T > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FracParams {
    pub alpha: f64,
    pub s: f64,
    pub t_final: f64,
}

impl FracParams {
    pub fn new(alpha: f64, s: f64, t_final: f64) -> Result<Self> {
        let p = Self { alpha, s, t_final };
        p.validate()?;
        Ok(p)
    }

    /// Reports every violated range at once.
    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            problems.push(format!("alpha must lie in (0, 1], got {}", self.alpha));
        }
        if !(self.s > 0.0 && self.s < 1.0) {
            problems.push(format!("s must lie in (0, 1), got {}", self.s));
        }
        if !(self.t_final > 0.0 && self.t_final.is_finite()) {
            problems.push(format!("T must be positive, got {}", self.t_final));
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(domain(problems.join("; ")))
        }
    }

    /// `α = 1`: the classical heat-type limit.
    pub fn is_classical(&self) -> bool {
        self.alpha == 1.0
    }
}
