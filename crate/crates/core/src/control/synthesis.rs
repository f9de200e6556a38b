use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::input_map::{assemble_input_map, InputMap};
use crate::error::{domain, Error, Result};
use crate::evolution::{ControlBasis, FracParams, SpaceBasis, TimeBasis};
use crate::nonlocal::Interval;
use crate::spectral::{ExteriorTraceTable, SpectralBasis};

/// Gram condition number above which an unregularized solve is flagged.
pub const CONDITION_WARNING: f64 = 1e12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthesisResult {
    pub coeffs: Vec<f64>,
    /// `‖B c - (u_1 - w_T)‖` in mode space.
    pub residual: f64,
    /// `‖u_1 - w_T‖`.
    pub target_norm: f64,
    pub control_norm: f64,
    /// `ρ`, relative to `‖BᵀB‖₂`.
    pub regularization: f64,
    /// Condition number of `BᵀB` (infinite if rank deficient).
    pub gram_condition: f64,
    pub warning: Option<String>,
}

/// Minimizes `‖B c - (u_1 - w_T)‖² + ρ ‖BᵀB‖₂ ‖c‖²`.
///
/// `ρ > 0` solves the regularized normal equations by Cholesky; `ρ = 0`
/// returns the minimum-norm least-squares solution through an SVD.
pub fn synthesize_control(
    map: &InputMap,
    w_t: &DVector<f64>,
    u1: &DVector<f64>,
    rho: f64,
) -> Result<SynthesisResult> {
    let n = map.n_modes();
    if w_t.len() != n || u1.len() != n {
        return Err(Error::Dimension(format!(
            "target has {} and free state {} modes, map has {n}",
            u1.len(),
            w_t.len()
        )));
    }
    if !(rho >= 0.0 && rho.is_finite()) {
        return Err(domain(format!("regularization must be non-negative, got {rho}")));
    }
    let b = &map.b;
    let r = u1 - w_t;
    let svd = b.clone().svd(false, false);
    let smax = svd.singular_values.max();
    let smin = if b.ncols() <= b.nrows() {
        svd.singular_values.min()
    } else {
        0.0
    };
    let gram_condition = if smin > 0.0 { (smax / smin).powi(2) } else { f64::INFINITY };
    let gram = b.transpose() * b;
    let rhs = b.transpose() * &r;
    let mut warning = None;
    let c = if rho > 0.0 {
        let shift = rho * smax * smax;
        let a = &gram + DMatrix::identity(gram.nrows(), gram.ncols()) * shift;
        a.cholesky()
            .ok_or_else(|| Error::Solver("regularized normal equations are not positive definite".into()))?
            .solve(&rhs)
    } else {
        if gram_condition > CONDITION_WARNING {
            warning = Some(format!(
                "unregularized synthesis with Gram condition {gram_condition:.3e}"
            ));
        }
        let full = b.clone().svd(true, true);
        let eps = f64::EPSILON * smax * b.nrows().max(b.ncols()) as f64;
        full.solve(&r, eps).map_err(|e| Error::Solver(e.to_string()))?
    };
    let residual = (b * &c - &r).norm();
    Ok(SynthesisResult {
        control_norm: c.norm(),
        coeffs: c.iter().copied().collect(),
        residual,
        target_norm: r.norm(),
        regularization: rho,
        gram_condition,
        warning,
    })
}

/// One cell of a controllability sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub time_panels: usize,
    pub space_elements: usize,
    pub n_controls: usize,
    /// Least-squares residual (`ρ = 0`).
    pub residual: f64,
    /// Residual and control norm with the sweep's `ρ`.
    pub regularized_residual: f64,
    pub regularized_control_norm: f64,
    pub target_norm: f64,
}

/// Inputs of [`controllability_sweep`].
#[derive(Debug, Clone)]
pub struct SweepSetup<'a> {
    pub params: FracParams,
    pub basis: &'a SpectralBasis,
    pub traces: &'a ExteriorTraceTable,
    pub control_set: Vec<Interval>,
    /// Piecewise-constant time panels; each should divide the next.
    pub time_panels: Vec<usize>,
    /// Elements per control interval for the spatial hats; each should
    /// divide the next.
    pub space_elements: Vec<usize>,
    pub smooth: bool,
    pub w_t: DVector<f64>,
    pub u1: DVector<f64>,
    pub rho: f64,
}

/// Residuals over the lattice of nested tensor bases. Within each row
/// (fixed spatial basis) and column (fixed time basis) the bases are nested,
/// so the `ρ = 0` residuals are nonincreasing along both.
pub fn controllability_sweep(setup: &SweepSetup) -> Result<Vec<SweepPoint>> {
    for sizes in [&setup.time_panels, &setup.space_elements] {
        if sizes.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(domain(format!("basis sizes {sizes:?} are not nested")));
        }
    }
    let mut out = Vec::new();
    for &se in &setup.space_elements {
        for &tp in &setup.time_panels {
            let cb = ControlBasis {
                time: TimeBasis::PiecewiseConstant {
                    t_final: setup.params.t_final,
                    panels: tp,
                    smooth: setup.smooth,
                },
                space: SpaceBasis::new(setup.control_set.clone(), se)?,
            };
            let map = assemble_input_map(&cb, &setup.params, setup.basis, setup.traces)?;
            let ls = synthesize_control(&map, &setup.w_t, &setup.u1, 0.0)?;
            let reg = synthesize_control(&map, &setup.w_t, &setup.u1, setup.rho)?;
            out.push(SweepPoint {
                time_panels: tp,
                space_elements: se,
                n_controls: map.n_controls(),
                residual: ls.residual,
                regularized_residual: reg.residual,
                regularized_control_norm: reg.control_norm,
                target_norm: ls.target_norm,
            });
        }
    }
    Ok(out)
}
