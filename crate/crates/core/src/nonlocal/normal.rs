use serde::{Deserialize, Serialize};

use super::assembly::{check_order, normalization_constant};
use super::mesh::Mesh;
use crate::error::{domain, Error, Result};
use crate::quad::power_primitive;

/// Guard against the quasi-singular regime next to `Ω`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalOptions {
    /// Smallest admissible `dist(x, Ω)`; `None` means the length of the
    /// element of `Ω` nearest to `x`.
    pub min_gap: Option<f64>,
}

impl Default for NormalOptions {
    fn default() -> Self {
        Self { min_gap: None }
    }
}

/// `N_s u(x) = C_{1,s} ∫_Ω (u(x) - u(y)) |x - y|^{-1-2s} dy` for `x` outside
/// `Ω̄`, where `u` is piecewise linear with nodal values `u` on `mesh` and
/// takes the value `u_x` at `x`.
pub fn nonlocal_normal_derivative(
    mesh: &Mesh,
    u: &[f64],
    s: f64,
    x: f64,
    u_x: f64,
) -> Result<f64> {
    nonlocal_normal_derivative_with(mesh, u, s, x, u_x, &NormalOptions::default())
}

pub fn nonlocal_normal_derivative_with(
    mesh: &Mesh,
    u: &[f64],
    s: f64,
    x: f64,
    u_x: f64,
    opts: &NormalOptions,
) -> Result<f64> {
    if u.len() != mesh.n_nodes() {
        return Err(Error::Dimension(format!(
            "{} values on a mesh of {} nodes",
            u.len(),
            mesh.n_nodes()
        )));
    }
    let f = NormalFunctional::new(mesh, s, x, opts)?;
    Ok(f.apply(u, u_x))
}

/// `N_s u(x)` as a linear functional: `N_s u(x) = mass · u(x) - Σ_i weights[i] u_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalFunctional {
    /// `C_{1,s} ∫_Ω |x - y|^{-1-2s} dy`.
    pub mass: f64,
    /// One weight per mesh node; zero off `Ω̄`.
    pub weights: Vec<f64>,
}

impl NormalFunctional {
    /// Each element of `Ω` is integrated exactly: with `d = |x - y|`, a
    /// linear `u` is `A ∓ slope · d` and the moments of `d^{-1-2s}` are
    /// closed form.
    pub fn new(mesh: &Mesh, s: f64, x: f64, opts: &NormalOptions) -> Result<Self> {
        check_order(s)?;
        let omega = mesh.omega();
        let gap = omega.distance(x);
        let nodes = mesh.nodes();
        let lo = nodes.partition_point(|&y| y < omega.lo);
        let hi = nodes.partition_point(|&y| y < omega.hi);
        let min_gap = opts.min_gap.unwrap_or_else(|| {
            if x > omega.hi {
                nodes[hi] - nodes[hi - 1]
            } else {
                nodes[lo + 1] - nodes[lo]
            }
        });
        if !(gap >= min_gap) || !x.is_finite() {
            return Err(domain(format!(
                "N_s needs dist(x, omega) >= {min_gap}, got {gap} at x = {x}"
            )));
        }
        let sigma = 2.0 * s;
        let c = normalization_constant(1, s)?;
        let right = x > omega.hi;
        let mut weights = vec![0.0; nodes.len()];
        for e in lo..hi {
            let (ya, yb) = (nodes[e], nodes[e + 1]);
            let h = yb - ya;
            let t = (x - ya) / h;
            let (d1, d2) = if right { (x - yb, x - ya) } else { (ya - x, yb - x) };
            let m0 = power_primitive(d1, d2, -sigma);
            // y = x ∓ d, so u(y) = u(x) ∓ slope·d with u extended linearly
            let m1 = power_primitive(d1, d2, 1.0 - sigma) / h;
            let m1 = if right { m1 } else { -m1 };
            weights[e] += c * ((1.0 - t) * m0 + m1);
            weights[e + 1] += c * (t * m0 - m1);
        }
        let (near, far) = if right {
            (x - omega.hi, x - omega.lo)
        } else {
            (omega.lo - x, omega.hi - x)
        };
        Ok(Self {
            mass: c * power_primitive(near, far, -sigma),
            weights,
        })
    }

    pub fn apply(&self, u: &[f64], u_x: f64) -> f64 {
        let dot: f64 = self.weights.iter().zip(u).map(|(w, v)| w * v).sum();
        self.mass * u_x - dot
    }
}
