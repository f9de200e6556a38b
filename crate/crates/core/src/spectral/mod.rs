//! Dirichlet eigenbasis of the discrete fractional Laplacian, its fractional
//! powers, and exterior traces `N_s φ_n` of the eigenfunctions.

mod basis;
mod traces;

pub use basis::{eigenpairs, PowerApplied, SpectralBasis, CLUSTER_GAP, UNRESOLVED_WARNING};
pub use traces::{exterior_traces, ExteriorTraceTable, TraceQuadrature};
