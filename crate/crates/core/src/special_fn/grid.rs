use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Monotone time nodes on `[0, T]` with `t_0 = 0` and `t_K = T`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    nodes: Vec<f64>,
    grading: f64,
}

impl TimeGrid {
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(domain("a time grid needs at least two nodes"));
        }
        if nodes[0] != 0.0 {
            return Err(domain("time grids start at t = 0"));
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) || !nodes.iter().all(|t| t.is_finite()) {
            return Err(domain(
                "time grid nodes must be finite and strictly increasing",
            ));
        }
        Ok(Self {
            nodes,
            grading: 1.0,
        })
    }

    pub fn uniform(t_final: f64, steps: usize) -> Result<Self> {
        Self::graded(t_final, steps, 1.0)
    }

    /// `t_k = T (k/K)^r`, clustered at `t = 0` for `r > 1`.
    pub fn graded(t_final: f64, steps: usize, exponent: f64) -> Result<Self> {
        if !(t_final > 0.0) || steps == 0 || !(exponent >= 1.0) {
            return Err(domain(format!(
                "graded grid needs T > 0, K >= 1, r >= 1 (got {t_final}, {steps}, {exponent})"
            )));
        }
        let k = steps as f64;
        let mut nodes: Vec<f64> = (0..=steps)
            .map(|i| t_final * (i as f64 / k).powf(exponent))
            .collect();
        nodes[steps] = t_final;
        Ok(Self {
            nodes,
            grading: exponent,
        })
    }

    /// Grid clustered at both ends, for data singular at `0` and `T`.
    pub fn graded_both(t_final: f64, steps: usize, exponent: f64) -> Result<Self> {
        let half = Self::graded(0.5 * t_final, steps.div_ceil(2).max(1), exponent)?;
        let mut nodes = half.nodes.clone();
        for &t in half.nodes.iter().rev().skip(1) {
            nodes.push(t_final - t);
        }
        let n = nodes.len();
        nodes[n - 1] = t_final;
        Ok(Self {
            nodes,
            grading: exponent,
        })
    }

    /// Grid clustered at `T`: the mirror image of [`TimeGrid::graded`].
    pub fn graded_toward_end(t_final: f64, steps: usize, exponent: f64) -> Result<Self> {
        Ok(Self::graded(t_final, steps, exponent)?.reflected())
    }

    /// Nodes `T - t` in increasing order.
    pub fn reflected(&self) -> Self {
        let t_final = self.t_final();
        let mut nodes: Vec<f64> = self.nodes.iter().rev().map(|&t| t_final - t).collect();
        nodes[0] = 0.0;
        let n = nodes.len();
        nodes[n - 1] = t_final;
        Self {
            nodes,
            grading: self.grading,
        }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn t_final(&self) -> f64 {
        *self.nodes.last().expect("non-empty")
    }

    pub fn grading(&self) -> f64 {
        self.grading
    }

    /// Halve every panel.
    pub fn refined(&self) -> Self {
        let mut nodes = Vec::with_capacity(2 * self.nodes.len() - 1);
        for w in self.nodes.windows(2) {
            nodes.push(w[0]);
            nodes.push(0.5 * (w[0] + w[1]));
        }
        nodes.push(self.t_final());
        Self {
            nodes,
            grading: self.grading,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_endpoints_exact() {
        let g = TimeGrid::graded(2.0, 16, 3.0).unwrap();
        assert_eq!(g.nodes()[0], 0.0);
        assert_eq!(g.t_final(), 2.0);
        assert!(g.nodes()[1] < 2.0 / 16.0);
    }

    #[test]
    fn reflection_is_involutive_on_uniform() {
        let g = TimeGrid::uniform(1.0, 8).unwrap();
        assert_eq!(g.reflected().reflected(), g);
    }

    #[test]
    fn both_ended_grid_is_monotone() {
        let g = TimeGrid::graded_both(1.0, 20, 2.0).unwrap();
        assert!(g.nodes().windows(2).all(|w| w[1] > w[0]));
        assert_eq!(g.t_final(), 1.0);
    }

    #[test]
    fn rejects_bad_nodes() {
        assert!(TimeGrid::from_nodes(vec![0.0]).is_err());
        assert!(TimeGrid::from_nodes(vec![0.1, 1.0]).is_err());
        assert!(TimeGrid::from_nodes(vec![0.0, 0.5, 0.5]).is_err());
    }
}
