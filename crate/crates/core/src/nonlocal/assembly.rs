//! Finite-element matrices of the fractional Laplacian on a 1D mesh.
//!
//! For hats extended by zero outside the mesh support `D`, the bilinear form
//!
//! ```text
//! F(u, v) = C/2 ∬_{ℝ²} (u(x) - u(y)) (v(x) - v(y)) |x - y|^{-1-σ} dx dy,   σ = 2s,
//! ```
//!
//! splits over element pairs. Let `near(e)` be `e` with its neighbours. Then
//!
//! ```text
//! F(u, v) = C/2 Σ_{e, e' near} ∬ (u(x) - u(y)) (v(x) - v(y)) K
//!         + C Σ_e ∫_e u v κ_e
//!         - C Σ_{(e, e') far, ordered} ∬_{e × e'} u(x) v(y) K,
//! ```
//!
//! with `κ_e(x) = ∫_{ℝ \ near(e)} K(x, y) dy = ((x - l_e)^{-σ} + (r_e - x)^{-σ}) / σ`.
//! Identical and adjacent pairs, and `κ_e`, are integrated in closed form.
//! Separated pairs use tensor Gauss-Legendre rules whose order grows when
//! the pair is close.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::mesh::Mesh;
use crate::error::{domain, Error, Result};
use crate::quad::{power_primitive, UnitRule};
use crate::special_fn::gamma;

/// `C_{N,s} = s 2^{2s} Γ((N + 2s)/2) / (π^{N/2} Γ(1 - s))`.
pub fn normalization_constant(dim: usize, s: f64) -> Result<f64> {
    if dim < 1 {
        return Err(domain("dimension must be at least 1"));
    }
    check_order(s)?;
    let n = dim as f64;
    Ok(s * 4f64.powf(s) * gamma(0.5 * n + s)?
        / (std::f64::consts::PI.powf(0.5 * n) * gamma(1.0 - s)?))
}

pub(crate) fn check_order(s: f64) -> Result<()> {
    if !(s > 0.0 && s < 1.0) {
        return Err(domain(format!("fractional order s must lie in (0, 1), got {s}")));
    }
    Ok(())
}

/// Quadrature settings for separated element pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AssemblyOptions {
    /// Gauss points per element for well-separated pairs.
    pub gauss_points: usize,
}

impl Default for AssemblyOptions {
    fn default() -> Self {
        Self { gauss_points: 6 }
    }
}

/// Dense stiffness matrix over the free nodes of a mesh.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StiffnessMatrix {
    pub matrix: DMatrix<f64>,
    /// Mesh node index of each row.
    pub dofs: Vec<usize>,
    pub s: f64,
    pub constant: f64,
}

impl StiffnessMatrix {
    /// Submatrix on the given mesh nodes.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Result<DMatrix<f64>> {
        let ri = positions(&self.dofs, rows)?;
        let ci = positions(&self.dofs, cols)?;
        Ok(DMatrix::from_fn(ri.len(), ci.len(), |i, j| self.matrix[(ri[i], ci[j])]))
    }
}

pub(crate) fn positions(dofs: &[usize], nodes: &[usize]) -> Result<Vec<usize>> {
    nodes
        .iter()
        .map(|n| {
            dofs.binary_search(n)
                .map_err(|_| Error::Dimension(format!("node {n} carries no degree of freedom")))
        })
        .collect()
}

/// `F(φ_i, φ_j)` over all free nodes of `mesh`, with default options.
pub fn assemble_stiffness(mesh: &Mesh, s: f64) -> Result<StiffnessMatrix> {
    assemble_stiffness_with(mesh, s, &AssemblyOptions::default())
}

pub fn assemble_stiffness_with(
    mesh: &Mesh,
    s: f64,
    opts: &AssemblyOptions,
) -> Result<StiffnessMatrix> {
    check_order(s)?;
    if opts.gauss_points < 2 {
        return Err(domain("at least two Gauss points are required"));
    }
    let c = normalization_constant(1, s)?;
    let sigma = 2.0 * s;
    let x = mesh.nodes();
    let n_nodes = x.len();
    let n_el = n_nodes - 1;

    // near-field and tail terms, banded, on node indices
    let mut near = vec![[0.0f64; 5]; n_nodes]; // near[i][2 + (j - i)]
    let mut add = |i: usize, j: usize, v: f64| {
        if i >= 1 && i < n_nodes - 1 && j >= 1 && j < n_nodes - 1 {
            near[i][(2 + j as isize - i as isize) as usize] += v;
        }
    };
    for e in 0..n_el {
        let h = x[e + 1] - x[e];
        let self_pair = c * h.powf(3.0 - sigma) / ((2.0 - sigma) * (3.0 - sigma));
        let slopes = [-1.0 / h, 1.0 / h];
        let tails = tail_moments(mesh, e, sigma, n_nodes);
        for a in 0..2 {
            for b in 0..2 {
                add(e + a, e + b, self_pair * slopes[a] * slopes[b] + c * tails[a][b]);
            }
        }
    }
    for k in 1..n_el {
        let (h1, h2) = (x[k] - x[k - 1], x[k + 1] - x[k]);
        let j = adjacent_moments(h1, h2, sigma);
        // slopes of φ_{k-1}, φ_k, φ_{k+1} on the left and right element
        let left = [-1.0 / h1, 1.0 / h1, 0.0];
        let right = [0.0, -1.0 / h2, 1.0 / h2];
        for a in 0..3 {
            for b in 0..3 {
                let v = left[a] * left[b] * j[0]
                    + (left[a] * right[b] + right[a] * left[b]) * j[1]
                    + right[a] * right[b] * j[2];
                // both orderings of the pair, times C/2
                add(k - 1 + a, k - 1 + b, c * v);
            }
        }
    }

    // separated pairs, one row per free node, upper triangle only
    let rules: Vec<UnitRule> = [1usize, 2, 3]
        .iter()
        .map(|&m| UnitRule::gauss_legendre(opts.gauss_points * m))
        .collect();
    let free = mesh.free_dofs();
    let rows: Vec<Vec<f64>> = free
        .par_iter()
        .map(|&i| far_row(x, i, sigma, c, &rules))
        .collect();

    let n = free.len();
    let mut a = DMatrix::zeros(n, n);
    for (r, &i) in free.iter().enumerate() {
        for (cidx, &j) in free.iter().enumerate().skip(r) {
            let mut v = rows[r][j];
            if j <= i + 2 {
                v += near[i][2 + j - i];
            }
            a[(r, cidx)] = v;
            a[(cidx, r)] = v;
        }
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::Quadrature("non-finite stiffness entry".into()));
    }
    Ok(StiffnessMatrix {
        matrix: a,
        dofs: free,
        s,
        constant: c,
    })
}

/// `∫_e λ_a λ_b κ_e` for the two local shape functions of element `e`.
fn tail_moments(mesh: &Mesh, e: usize, sigma: f64, n_nodes: usize) -> [[f64; 2]; 2] {
    let x = mesh.nodes();
    let (xa, xb) = (x[e], x[e + 1]);
    let h = xb - xa;
    let l = if e > 0 { x[e - 1] } else { xa };
    let r = if e + 2 < n_nodes { x[e + 2] } else { xb };
    // local shapes as polynomials in ξ = x - l and η = r - x
    let d1 = xa - l;
    let d2 = r - xb;
    let left_shapes = [[(d1 + h) / h, -1.0 / h], [-d1 / h, 1.0 / h]];
    let right_shapes = [[-d2 / h, 1.0 / h], [(d2 + h) / h, -1.0 / h]];
    let active = [e >= 1, e + 1 < n_nodes - 1];
    let mut out = [[0.0; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            if !(active[a] && active[b]) {
                continue;
            }
            let lp = poly_mul(left_shapes[a], left_shapes[b]);
            let rp = poly_mul(right_shapes[a], right_shapes[b]);
            let mut v = 0.0;
            for m in 0..3 {
                if lp[m] != 0.0 {
                    v += lp[m] * power_primitive(d1, d1 + h, m as f64 + 1.0 - sigma);
                }
                if rp[m] != 0.0 {
                    v += rp[m] * power_primitive(d2, d2 + h, m as f64 + 1.0 - sigma);
                }
            }
            out[a][b] = v / sigma;
        }
    }
    out
}

fn poly_mul(p: [f64; 2], q: [f64; 2]) -> [f64; 3] {
    [p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1]]
}

/// `[J_{2,0}, J_{1,1}, J_{0,2}]` with
/// `J_{m,n} = ∫_0^{h1} ∫_0^{h2} p^m q^n (p + q)^{-1-σ} dq dp`, evaluated by
/// splitting the rectangle along its diagonal (`q = t p` and `p = t q`).
pub(crate) fn adjacent_moments(h1: f64, h2: f64, sigma: f64) -> [f64; 3] {
    let f1 = ray_moments(h2 / h1, sigma);
    let f2 = ray_moments(h1 / h2, sigma);
    let a1 = h1.powf(3.0 - sigma) / (3.0 - sigma);
    let a2 = h2.powf(3.0 - sigma) / (3.0 - sigma);
    [
        a1 * f1[0] + a2 * f2[2],
        a1 * f1[1] + a2 * f2[1],
        a1 * f1[2] + a2 * f2[0],
    ]
}

/// `F_k(c) = ∫_0^c t^k (1 + t)^{-1-σ} dt` for `k = 0, 1, 2`.
fn ray_moments(c: f64, sigma: f64) -> [f64; 3] {
    // w = 1 + t; t^k expanded in powers of w
    let p = |mu: f64| power_primitive(1.0, 1.0 + c, mu);
    let m0 = p(-sigma);
    let m1 = p(1.0 - sigma);
    let m2 = p(2.0 - sigma);
    [m0, m1 - m0, m2 - 2.0 * m1 + m0]
}

/// Far-pair contributions `-C Σ ∬ φ_i(x) φ_j(y) K` to row `i`, indexed by node.
fn far_row(x: &[f64], i: usize, sigma: f64, c: f64, rules: &[UnitRule]) -> Vec<f64> {
    let n_el = x.len() - 1;
    let mut row = vec![0.0; x.len()];
    let expo = -1.0 - sigma;
    // elements carrying φ_i, with φ_i's local index there
    for (e, local) in [(i.wrapping_sub(1), 1usize), (i, 0usize)] {
        if e >= n_el {
            continue;
        }
        let (xa, xb) = (x[e], x[e + 1]);
        let he = xb - xa;
        for f in 0..n_el {
            if f + 1 < i || f.abs_diff(e) < 2 {
                // columns left of i are filled by symmetry
                continue;
            }
            let (ya, yb) = (x[f], x[f + 1]);
            let hf = yb - ya;
            let gap = if f > e { ya - xb } else { xa - yb };
            let ratio = gap / he.max(hf);
            let rule = if ratio < 1.5 {
                &rules[2]
            } else if ratio < 4.0 {
                &rules[1]
            } else {
                &rules[0]
            };
            let (mut i0, mut i1) = (0.0, 0.0);
            for (&xi, &wx) in rule.nodes.iter().zip(&rule.weights) {
                let px = xa + he * xi;
                let phi = if local == 1 { xi } else { 1.0 - xi };
                let wphi = wx * phi;
                for (&yi, &wy) in rule.nodes.iter().zip(&rule.weights) {
                    let py = ya + hf * yi;
                    let k = (px - py).abs().powf(expo) * wphi * wy;
                    i0 += k * (1.0 - yi);
                    i1 += k * yi;
                }
            }
            let scale = -c * he * hf;
            row[f] += scale * i0;
            row[f + 1] += scale * i1;
        }
    }
    row
}

/// Piecewise-linear mass matrix over the given nodes (typically the interior
/// dofs, or all free dofs).
pub fn assemble_mass(mesh: &Mesh, dofs: &[usize]) -> Result<DMatrix<f64>> {
    let x = mesh.nodes();
    let n = dofs.len();
    if dofs.windows(2).any(|w| w[0] >= w[1]) || dofs.iter().any(|&d| d >= x.len()) {
        return Err(domain("mass-matrix dofs must be increasing node indices"));
    }
    let mut m = DMatrix::zeros(n, n);
    for (r, &i) in dofs.iter().enumerate() {
        let hl = if i > 0 { x[i] - x[i - 1] } else { 0.0 };
        let hr = if i + 1 < x.len() { x[i + 1] - x[i] } else { 0.0 };
        m[(r, r)] = (hl + hr) / 3.0;
        if r + 1 < n && dofs[r + 1] == i + 1 {
            m[(r, r + 1)] = hr / 6.0;
            m[(r + 1, r)] = hr / 6.0;
        }
    }
    Ok(m)
}
