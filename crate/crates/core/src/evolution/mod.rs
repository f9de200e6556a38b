//! Forward and adjoint solution series of the controlled system, in the
//! Dirichlet eigenbasis, and the duality identity linking them.
//!
//! With `u = Σ u_n φ_n`, the exterior control enters each mode through
//! `(g(t), N_s φ_n)_{L²(O)}` and is convolved with the relaxation kernel
//! `k_n(τ) = τ^{α-1} E_{α,α}(-λ_n τ^α)`.

mod control_field;
mod params;
mod response;
mod solve;

pub use control_field::{ControlBasis, ControlField, Segment, SpaceBasis, TimeBasis};
pub use params::FracParams;
pub use solve::{
    adjoint_exterior_trace, adjoint_fractional_trace, adjoint_fractional_trace_modes,
    adjoint_modes_at, duality_gap, growth_ratios, solve_adjoint, solve_controlled, solve_full,
    solve_homogeneous, DualityReport, Trajectory, TrajectoryKind,
};
pub(crate) use response::KernelTable;
