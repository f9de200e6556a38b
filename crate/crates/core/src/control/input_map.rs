use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::{ControlBasis, FracParams, KernelTable};
use crate::spectral::{ExteriorTraceTable, SpectralBasis};

/// Linear map from control coefficients to the modes of `u(T)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputMap {
    /// Rows: modes; column `j · n_space + m`: the basis control `ψ_j χ_m`.
    pub b: DMatrix<f64>,
    pub control_basis: ControlBasis,
    pub params: FracParams,
    /// [`SpectralBasis::hash`] of the eigenbasis used.
    pub basis_hash: String,
}

/// `B[n][(j, m)] = -(χ_m, N_s φ_n)_{L²(O)} ∫_0^T ψ_j(T - τ) k_n(τ) dτ`, the
/// forward solver's terminal value for one basis control.
pub fn assemble_input_map(
    control_basis: &ControlBasis,
    p: &FracParams,
    basis: &SpectralBasis,
    traces: &ExteriorTraceTable,
) -> Result<InputMap> {
    p.validate()?;
    control_basis.time.validate(p.t_final)?;
    if traces.n_modes() < basis.len() {
        return Err(Error::Dimension(format!(
            "trace table has {} modes, basis has {}",
            traces.n_modes(),
            basis.len()
        )));
    }
    let s = control_basis.space.trace_pairing(traces)?;
    let nt = control_basis.time.len();
    let ns = control_basis.space.len();
    let segments: Vec<_> = (0..nt).map(|j| control_basis.time.segments(j)).collect();
    let responses: Vec<Vec<f64>> = (0..basis.len())
        .into_par_iter()
        .map(|n| {
            let mut table = KernelTable::new(p.alpha, basis.lambdas[n]);
            segments
                .iter()
                .map(|seg| table.response(seg, p.t_final))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    let b = DMatrix::from_fn(basis.len(), nt * ns, |n, col| {
        -s[(n, col % ns)] * responses[n][col / ns]
    });
    Ok(InputMap {
        b,
        control_basis: control_basis.clone(),
        params: *p,
        basis_hash: basis.hash(),
    })
}

impl InputMap {
    pub fn n_controls(&self) -> usize {
        self.b.ncols()
    }

    pub fn n_modes(&self) -> usize {
        self.b.nrows()
    }

    /// Terminal modes `B c`.
    pub fn apply(&self, c: &[f64]) -> Result<DVector<f64>> {
        if c.len() != self.n_controls() {
            return Err(Error::Dimension(format!(
                "{} coefficients for {} controls",
                c.len(),
                self.n_controls()
            )));
        }
        Ok(&self.b * DVector::from_column_slice(c))
    }
}
