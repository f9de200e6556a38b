use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::spectral::{ExteriorTraceTable, SpectralBasis};

/// Per-mode and per-cluster exterior trace norms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    /// `‖N_s φ_n‖_{L²(O)}`.
    pub norms: Vec<f64>,
    /// `(first mode, last mode + 1, min over unit combinations)` per cluster.
    pub cluster_norms: Vec<(usize, usize, f64)>,
    pub min_cluster_norm: f64,
    pub threshold: f64,
    /// Clusters whose norm falls below the threshold.
    pub flagged: Vec<usize>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.flagged.is_empty()
    }
}

/// Smallest `‖N_s ψ‖_{L²(O)}` over unit-norm `ψ` in each eigenvalue cluster
/// among the first `n_max` modes.
pub fn unique_continuation_probe(
    basis: &SpectralBasis,
    traces: &ExteriorTraceTable,
    n_max: usize,
    threshold: f64,
) -> ProbeReport {
    let n_max = n_max.min(traces.n_modes()).min(basis.len());
    let norms: Vec<f64> = traces.norms().into_iter().take(n_max).collect();
    let mut cluster_norms = Vec::new();
    for range in &basis.clusters {
        if range.start >= n_max {
            break;
        }
        let end = range.end.min(n_max);
        let k = end - range.start;
        let v = if k == 1 {
            norms[range.start]
        } else {
            // σ_min of the weighted trace rows
            let w = DMatrix::from_fn(traces.points.len(), k, |q, i| {
                traces.weights[q].sqrt() * traces.table[(range.start + i, q)]
            });
            w.singular_values().min()
        };
        cluster_norms.push((range.start, end, v));
    }
    let min_cluster_norm = cluster_norms.iter().map(|c| c.2).fold(f64::INFINITY, f64::min);
    let flagged = cluster_norms
        .iter()
        .enumerate()
        .filter(|(_, c)| !(c.2 > threshold))
        .map(|(i, _)| i)
        .collect();
    ProbeReport {
        norms,
        cluster_norms,
        min_cluster_norm,
        threshold,
        flagged,
    }
}
