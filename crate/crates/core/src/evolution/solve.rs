use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::control_field::ControlField;
use super::params::FracParams;
use super::response::KernelTable;
use crate::error::{Error, Result};
use crate::special_fn::{kernel_panel_moments, ml_time_kernel, relaxation, TimeGrid};
use crate::spectral::{ExteriorTraceTable, SpectralBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrajectoryKind {
    Homogeneous,
    Controlled,
    Full,
    Adjoint,
}

/// Mode coefficients of a state on a time grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub params: FracParams,
    pub kind: TrajectoryKind,
    pub grid: TimeGrid,
    /// Times actually stored: the grid, minus `T` for an adjoint with `α < 1`.
    pub times: Vec<f64>,
    /// `c[n][k] = (state(t_k), φ_n)_M`.
    pub mode_coeffs: DMatrix<f64>,
    pub lambdas: Vec<f64>,
    /// Mode coefficients of the initial (or terminal) datum.
    pub data: DVector<f64>,
    /// Unresolved mass of the datum, see [`SpectralBasis::unresolved_mass`].
    pub unresolved: f64,
}

impl Trajectory {
    pub fn n_modes(&self) -> usize {
        self.mode_coeffs.nrows()
    }

    /// Mode vector at stored time index `k`.
    pub fn modes_at(&self, k: usize) -> DVector<f64> {
        self.mode_coeffs.column(k).into_owned()
    }

    /// Nodal snapshot at stored time index `k`.
    pub fn nodal(&self, basis: &SpectralBasis, k: usize) -> Result<Vec<f64>> {
        basis.synthesize(&self.modes_at(k))
    }

    /// `‖state(t_k)‖_{L²(Ω)}` by Parseval.
    pub fn norms(&self) -> Vec<f64> {
        (0..self.times.len()).map(|k| self.mode_coeffs.column(k).norm()).collect()
    }
}

fn check_basis(p: &FracParams, basis: &SpectralBasis) -> Result<()> {
    p.validate()?;
    if (p.s - basis.s).abs() > 0.0 {
        return Err(Error::Dimension(format!(
            "parameters have s = {}, basis was built for s = {}",
            p.s, basis.s
        )));
    }
    Ok(())
}

fn check_grid(p: &FracParams, grid: &TimeGrid) -> Result<()> {
    if (grid.t_final() - p.t_final).abs() > 1e-12 * p.t_final {
        return Err(crate::error::domain(format!(
            "grid ends at {}, horizon is {}",
            grid.t_final(),
            p.t_final
        )));
    }
    Ok(())
}

/// `w_n(t) = (u_0, φ_n) E_{α,1}(-λ_n t^α)`.
pub fn solve_homogeneous(
    u0: &[f64],
    p: &FracParams,
    grid: &TimeGrid,
    basis: &SpectralBasis,
) -> Result<Trajectory> {
    check_basis(p, basis)?;
    check_grid(p, grid)?;
    let data = basis.coefficients(u0)?;
    let times = grid.nodes().to_vec();
    let rows: Vec<Vec<f64>> = (0..basis.len())
        .into_par_iter()
        .map(|n| {
            times
                .iter()
                .map(|&t| Ok(data[n] * relaxation(p.alpha, basis.lambdas[n], t)?))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    Ok(Trajectory {
        params: *p,
        kind: TrajectoryKind::Homogeneous,
        grid: grid.clone(),
        mode_coeffs: DMatrix::from_fn(basis.len(), times.len(), |n, k| rows[n][k]),
        times,
        lambdas: basis.lambdas.clone(),
        unresolved: basis.unresolved_mass(u0)?,
        data,
    })
}

/// `a[n][j] = Σ_m c[j][m] (χ_m, N_s φ_n)_{L²(O)}`: the time-basis weights of
/// `(g(t), N_s φ_n)`.
pub(crate) fn mode_time_weights(
    g: &ControlField,
    basis: &SpectralBasis,
    traces: &ExteriorTraceTable,
) -> Result<DMatrix<f64>> {
    if traces.n_modes() < basis.len() {
        return Err(Error::Dimension(format!(
            "trace table has {} modes, basis has {}",
            traces.n_modes(),
            basis.len()
        )));
    }
    let s = g.basis.space.trace_pairing(traces)?;
    Ok(s.rows(0, basis.len()) * g.coeffs.transpose())
}

/// `u_n(t) = -∫_0^t (g(t - τ), N_s φ_n) τ^{α-1} E_{α,α}(-λ_n τ^α) dτ`, exact for
/// the piecewise-linear time profiles of the control basis.
pub fn solve_controlled(
    g: &ControlField,
    p: &FracParams,
    grid: &TimeGrid,
    basis: &SpectralBasis,
    traces: &ExteriorTraceTable,
) -> Result<Trajectory> {
    check_basis(p, basis)?;
    check_grid(p, grid)?;
    g.basis.time.validate(p.t_final)?;
    let weights = mode_time_weights(g, basis, traces)?;
    let segments: Vec<_> = (0..g.basis.time.len()).map(|j| g.basis.time.segments(j)).collect();
    let times = grid.nodes().to_vec();
    let rows: Vec<Vec<f64>> = (0..basis.len())
        .into_par_iter()
        .map(|n| {
            let mut table = KernelTable::new(p.alpha, basis.lambdas[n]);
            times
                .iter()
                .map(|&t| {
                    let mut u = 0.0;
                    for (j, seg) in segments.iter().enumerate() {
                        let a = weights[(n, j)];
                        if a != 0.0 {
                            u -= a * table.response(seg, t)?;
                        }
                    }
                    Ok(u)
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    Ok(Trajectory {
        params: *p,
        kind: TrajectoryKind::Controlled,
        grid: grid.clone(),
        mode_coeffs: DMatrix::from_fn(basis.len(), times.len(), |n, k| rows[n][k]),
        times,
        lambdas: basis.lambdas.clone(),
        data: DVector::zeros(basis.len()),
        unresolved: 0.0,
    })
}

/// Superposition of [`solve_homogeneous`] and [`solve_controlled`].
pub fn solve_full(
    u0: &[f64],
    g: &ControlField,
    p: &FracParams,
    grid: &TimeGrid,
    basis: &SpectralBasis,
    traces: &ExteriorTraceTable,
) -> Result<Trajectory> {
    let w = solve_homogeneous(u0, p, grid, basis)?;
    let u = solve_controlled(g, p, grid, basis, traces)?;
    Ok(Trajectory {
        kind: TrajectoryKind::Full,
        mode_coeffs: &w.mode_coeffs + &u.mode_coeffs,
        ..w
    })
}

/// `v_n(t) = (u_{0T}, φ_n) (T - t)^{α-1} E_{α,α}(-λ_n (T - t)^α)`; for `α < 1`
/// the singular time `t = T` is left out.
pub fn solve_adjoint(
    u0t: &[f64],
    p: &FracParams,
    grid: &TimeGrid,
    basis: &SpectralBasis,
) -> Result<Trajectory> {
    check_basis(p, basis)?;
    check_grid(p, grid)?;
    let data = basis.coefficients(u0t)?;
    let times: Vec<f64> = grid
        .nodes()
        .iter()
        .copied()
        .filter(|&t| p.is_classical() || t < p.t_final)
        .collect();
    let mode_coeffs = adjoint_modes(p, &basis.lambdas, &data, &times)?;
    Ok(Trajectory {
        params: *p,
        kind: TrajectoryKind::Adjoint,
        grid: grid.clone(),
        mode_coeffs,
        times,
        lambdas: basis.lambdas.clone(),
        unresolved: basis.unresolved_mass(u0t)?,
        data,
    })
}

fn adjoint_kernel(p: &FracParams, lambda: f64, t: f64) -> Result<f64> {
    if t >= p.t_final {
        if p.is_classical() {
            return Ok(1.0);
        }
        return Err(Error::TerminalEvaluation { alpha: p.alpha });
    }
    ml_time_kernel(p.alpha, lambda, p.t_final - t)
}

fn adjoint_modes(p: &FracParams, lambdas: &[f64], data: &DVector<f64>, times: &[f64]) -> Result<DMatrix<f64>> {
    let mut out = DMatrix::zeros(data.len(), times.len());
    for (k, &t) in times.iter().enumerate() {
        for n in 0..data.len() {
            out[(n, k)] = data[n] * adjoint_kernel(p, lambdas[n], t)?;
        }
    }
    Ok(out)
}

/// Mode coefficients of the adjoint state at any `t`; errors at `t = T` for `α < 1`.
pub fn adjoint_modes_at(vtraj: &Trajectory, t: f64) -> Result<DVector<f64>> {
    let m = adjoint_modes(&vtraj.params, &vtraj.lambdas, &vtraj.data, &[t])?;
    Ok(m.column(0).into_owned())
}

/// `I_{t,T}^{1-α} v(t) = Σ u_{0,n} E_{α,1}(-λ_n (T - t)^α) φ_n`, in mode space.
pub fn adjoint_fractional_trace_modes(vtraj: &Trajectory, t: f64) -> Result<DVector<f64>> {
    let p = &vtraj.params;
    if !(t >= 0.0 && t <= p.t_final) {
        return Err(crate::error::domain(format!("t = {t} outside [0, T]")));
    }
    let mut out = vtraj.data.clone();
    for n in 0..out.len() {
        out[n] *= relaxation(p.alpha, vtraj.lambdas[n], p.t_final - t)?;
    }
    Ok(out)
}

/// Nodal values of [`adjoint_fractional_trace_modes`].
pub fn adjoint_fractional_trace(vtraj: &Trajectory, basis: &SpectralBasis, t: f64) -> Result<Vec<f64>> {
    basis.synthesize(&adjoint_fractional_trace_modes(vtraj, t)?)
}

/// `N_s v(t, x_q) = Σ u_{0,n} k_n(T - t) N_s φ_n(x_q)` at the trace points.
pub fn adjoint_exterior_trace(vtraj: &Trajectory, traces: &ExteriorTraceTable, t: f64) -> Result<Vec<f64>> {
    let v = adjoint_modes_at(vtraj, t)?;
    let n = v.len().min(traces.n_modes());
    let out = traces.table.rows(0, n).transpose() * v.rows(0, n);
    Ok(out.iter().copied().collect())
}

/// The two sides of the duality identity `(u(T), u_{0T}) = -∫∫ g N_s v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualityReport {
    /// `(u(T), u_{0T})_{L²(Ω)}`.
    pub state_pairing: f64,
    /// `∫_0^T ∫_O g N_s v dx dt`.
    pub control_pairing: f64,
    /// `|state_pairing + control_pairing|`.
    pub gap: f64,
    /// `gap / max(|state_pairing|, |control_pairing|)`, zero when both vanish.
    pub relative: f64,
}

/// Evaluates both sides independently: `u(T)` by the exact-kernel forward
/// solve, the control side by the trapezoidal rule applied to
/// `(g(t), N_s v(t))` on `grid` merged with the kinks of the control's time
/// profile (exact product rule on a last panel where `v` is singular).
pub fn duality_gap(
    u0t: &[f64],
    g: &ControlField,
    p: &FracParams,
    grid: &TimeGrid,
    basis: &SpectralBasis,
    traces: &ExteriorTraceTable,
) -> Result<DualityReport> {
    let end = TimeGrid::from_nodes(vec![0.0, p.t_final])?;
    let u = solve_controlled(g, p, &end, basis, traces)?;
    let mut merged = grid.nodes().to_vec();
    merged.extend(g.basis.time.breakpoints().into_iter().filter(|&t| t > 0.0 && t < p.t_final));
    merged.sort_by(f64::total_cmp);
    merged.dedup_by(|a, b| (*a - *b).abs() <= 1e-14 * p.t_final);
    let grid = TimeGrid::from_nodes(merged)?;
    let v = solve_adjoint(u0t, p, &grid, basis)?;
    let u_t = u.modes_at(1);
    let state_pairing = u_t.dot(&v.data);

    let weights = mode_time_weights(g, basis, traces)?;
    let time = &g.basis.time;
    let nodes = grid.nodes();
    let profile = |t: f64, right: bool| -> DVector<f64> {
        let psi = DVector::from_fn(time.len(), |j, _| time.eval_side(j, t, right));
        &weights * psi
    };
    let mut control_pairing = 0.0;
    for i in 0..nodes.len() - 1 {
        let (a, b) = (nodes[i], nodes[i + 1]);
        let fa = profile(a, true);
        let fb = profile(b, false);
        let last = i + 2 == nodes.len();
        for n in 0..basis.len() {
            let c = v.data[n];
            if c == 0.0 || (fa[n] == 0.0 && fb[n] == 0.0) {
                continue;
            }
            let lambda = basis.lambdas[n];
            if last && !p.is_classical() {
                // f linear on [a, T]; in τ = T - t, f = fb + (fa - fb) τ / (T - a)
                let (m0, m1) = kernel_panel_moments(p.alpha, lambda, 0.0, b - a)?;
                control_pairing += c * (fb[n] * m0 + (fa[n] - fb[n]) * m1 / (b - a));
            } else {
                let ka = adjoint_kernel(p, lambda, a)?;
                let kb = adjoint_kernel(p, lambda, b)?;
                control_pairing += c * 0.5 * (b - a) * (fa[n] * ka + fb[n] * kb);
            }
        }
    }
    let gap = (state_pairing + control_pairing).abs();
    let scale = state_pairing.abs().max(control_pairing.abs());
    Ok(DualityReport {
        state_pairing,
        control_pairing,
        gap,
        relative: if scale > 0.0 { gap / scale } else { 0.0 },
    })
}

/// `‖u(t)‖ / (t^{α(γ-1)+1} + 1)` along a trajectory: the ratio whose
/// boundedness is the growth estimate for controlled states.
pub fn growth_ratios(traj: &Trajectory, gamma: f64) -> Vec<f64> {
    let e = traj.params.alpha * (gamma - 1.0) + 1.0;
    traj.times
        .iter()
        .zip(traj.norms())
        .map(|(&t, n)| n / (t.powf(e) + 1.0))
        .collect()
}
