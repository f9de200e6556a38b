use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::basis::SpectralBasis;
use crate::error::{domain, Result};
use crate::nonlocal::{Interval, NormalFunctional, NormalOptions};
use crate::quad::UnitRule;

/// Gauss-Legendre sampling of the control set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceQuadrature {
    /// Panels per control interval.
    pub panels: usize,
    /// Gauss points per panel.
    pub points: usize,
}

impl Default for TraceQuadrature {
    fn default() -> Self {
        Self {
            panels: 40,
            points: 4,
        }
    }
}

impl TraceQuadrature {
    /// Points and weights of the composite rule over `O`.
    pub fn nodes(&self, control_set: &[Interval]) -> Result<(Vec<f64>, Vec<f64>)> {
        if self.panels == 0 || self.points < 2 {
            return Err(domain("trace quadrature needs at least one panel of two points"));
        }
        let rule = UnitRule::gauss_legendre(self.points);
        let mut pts = Vec::new();
        let mut wts = Vec::new();
        let mut sorted = control_set.to_vec();
        sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        for o in sorted {
            let h = o.length() / self.panels as f64;
            for p in 0..self.panels {
                let a = o.lo + h * p as f64;
                for (x, w) in rule.on(a, a + h) {
                    pts.push(x);
                    wts.push(w);
                }
            }
        }
        Ok((pts, wts))
    }
}

/// `T[n][m] = N_s φ_n(x_m)` at quadrature points `x_m` of `O`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExteriorTraceTable {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
    pub table: DMatrix<f64>,
}

/// Evaluates `N_s φ_n` at the given exterior points. Each point is a linear
/// functional of the nodal values, applied to all modes at once.
pub fn exterior_traces(
    basis: &SpectralBasis,
    points: Vec<f64>,
    weights: Vec<f64>,
    opts: &NormalOptions,
) -> Result<ExteriorTraceTable> {
    if points.len() != weights.len() {
        return Err(crate::Error::Dimension(format!(
            "{} points but {} weights",
            points.len(),
            weights.len()
        )));
    }
    let mesh = &basis.mesh;
    let dofs = mesh.interior_dofs();
    let columns: Vec<Vec<f64>> = points
        .par_iter()
        .map(|&x| -> Result<Vec<f64>> {
            let f = NormalFunctional::new(mesh, basis.s, x, opts)?;
            let w = DVector::from_iterator(dofs.len(), dofs.iter().map(|&i| f.weights[i]));
            // φ_n vanishes at x
            Ok((-(basis.modes.transpose() * w)).iter().copied().collect())
        })
        .collect::<Result<_>>()?;
    let table = DMatrix::from_fn(basis.len(), points.len(), |n, m| columns[m][n]);
    Ok(ExteriorTraceTable {
        points,
        weights,
        table,
    })
}

impl ExteriorTraceTable {
    /// Traces on a composite Gauss rule over `O`.
    pub fn on_control_set(
        basis: &SpectralBasis,
        control_set: &[Interval],
        quad: &TraceQuadrature,
        opts: &NormalOptions,
    ) -> Result<Self> {
        let (p, w) = quad.nodes(control_set)?;
        exterior_traces(basis, p, w, opts)
    }

    pub fn n_modes(&self) -> usize {
        self.table.nrows()
    }

    /// `‖N_s φ_n‖_{L²(O)}` for every mode.
    pub fn norms(&self) -> Vec<f64> {
        (0..self.n_modes())
            .map(|n| {
                self.table
                    .row(n)
                    .iter()
                    .zip(&self.weights)
                    .map(|(t, w)| w * t * t)
                    .sum::<f64>()
                    .sqrt()
            })
            .collect()
    }

    /// `(f, N_s φ_n)_{L²(O)}` for every mode, `f` sampled at the points.
    pub fn pair(&self, f: &[f64]) -> DVector<f64> {
        let fw = DVector::from_iterator(
            self.points.len(),
            f.iter().zip(&self.weights).map(|(a, b)| a * b),
        );
        &self.table * fw
    }

    /// Same table with the rows of the given modes negated.
    pub fn with_flipped_signs(&self, modes: &[usize]) -> Self {
        let mut out = self.clone();
        for &n in modes {
            out.table.row_mut(n).neg_mut();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonlocal::{assemble_stiffness, nonlocal_normal_derivative, Mesh};
    use crate::spectral::eigenpairs;

    #[test]
    fn table_matches_pointwise_evaluation() {
        let mesh = Mesh::uniform(Interval::new(-1.0, 1.0).unwrap(), 40).unwrap();
        let a = assemble_stiffness(&mesh, 0.5).unwrap();
        let b = eigenpairs(&mesh, &a, 5).unwrap();
        let o = [Interval::new(1.5, 2.0).unwrap()];
        let t = ExteriorTraceTable::on_control_set(
            &b,
            &o,
            &TraceQuadrature::default(),
            &NormalOptions::default(),
        )
        .unwrap();
        let w: f64 = t.weights.iter().sum();
        assert!((w - 0.5).abs() < 1e-14);
        for n in 0..5 {
            let phi = b.nodal_mode(n);
            for m in [0, 17, 95] {
                let v = nonlocal_normal_derivative(&mesh, &phi, 0.5, t.points[m], 0.0).unwrap();
                assert!((v - t.table[(n, m)]).abs() < 1e-13 * v.abs().max(1e-3));
            }
        }
        // ground state is positive, so its trace is negative
        assert!(t.table.row(0).iter().all(|&v| v < 0.0));
        assert!(t.norms().iter().all(|&v| v > 0.0));
    }
}
