use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::domain::{DomainSpec, Interval};
use crate::error::{domain, Result};

/// Piecewise-linear mesh on an interval containing `Ω`.
///
/// Hat functions live on every node except the two ends of the mesh, where
/// functions are extended by zero. `Ω`'s endpoints are always nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mesh {
    nodes: Vec<f64>,
    omega: Interval,
    interior: Vec<usize>,
}

impl Mesh {
    pub fn from_nodes(nodes: Vec<f64>, omega: Interval) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(domain("a mesh needs at least two elements"));
        }
        if nodes.iter().any(|x| !x.is_finite()) || nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(domain("mesh nodes must be finite and strictly increasing"));
        }
        for end in [omega.lo, omega.hi] {
            if !nodes.contains(&end) {
                return Err(domain(format!("omega endpoint {end} is not a mesh node")));
            }
        }
        let interior = (0..nodes.len()).filter(|&i| omega.contains(nodes[i])).collect();
        Ok(Self {
            nodes,
            omega,
            interior,
        })
    }

    /// Uniform mesh of `Ω` with `elements` elements.
    pub fn uniform(omega: Interval, elements: usize) -> Result<Self> {
        Self::graded(omega, elements, 1.0)
    }

    /// Mesh of `Ω` graded symmetrically toward both endpoints:
    /// `x = c ± (|Ω|/2) |ξ|^grading` on a uniform `ξ ∈ [-1, 1]`.
    pub fn graded(omega: Interval, elements: usize, grading: f64) -> Result<Self> {
        Self::from_nodes(graded_nodes(omega, elements, grading)?, omega)
    }

    /// Mesh of the truncation box: the graded mesh of `Ω`, control intervals
    /// resolved with spacing about `h_control`, and geometrically growing
    /// elements elsewhere (functions vanish there).
    pub fn extended(
        spec: &DomainSpec,
        elements: usize,
        grading: f64,
        h_control: f64,
    ) -> Result<Self> {
        spec.validate()?;
        if !(h_control > 0.0) {
            return Err(domain("control-set spacing must be positive"));
        }
        let omega = spec.omega;
        let mut nodes = graded_nodes(omega, elements, grading)?;
        let mut controls = spec.control_set.clone();
        controls.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        let left: Vec<Interval> = controls.iter().copied().filter(|o| o.hi <= omega.lo).collect();
        let right: Vec<Interval> = controls.iter().copied().filter(|o| o.lo >= omega.hi).collect();

        // walk outward from Ω on each side
        let h_in = h_control;
        let add_side = |blocks: Vec<Interval>, start: f64, end: f64, dir: f64| {
            let mut pos = start;
            let mut out = Vec::new();
            let mut ordered = blocks;
            if dir < 0.0 {
                ordered.reverse();
            }
            for o in ordered {
                let (near, far) = if dir > 0.0 { (o.lo, o.hi) } else { (o.hi, o.lo) };
                out.extend(bridge(pos, near, h_in));
                let m = ((far - near).abs() / h_in).ceil().max(1.0) as usize;
                for i in 1..=m {
                    out.push(near + (far - near) * i as f64 / m as f64);
                }
                pos = far;
            }
            out.extend(bridge(pos, end, h_in));
            out
        };
        let box_ = spec.truncation_box;
        let rights = add_side(right, omega.hi, box_.hi, 1.0);
        let lefts = add_side(left, omega.lo, box_.lo, -1.0);
        nodes.extend(rights);
        nodes.extend(lefts);
        nodes.sort_by(f64::total_cmp);
        nodes.dedup();
        Self::from_nodes(nodes, omega)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn omega(&self) -> Interval {
        self.omega
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_elements(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Endpoints of element `e = [x_e, x_{e+1}]`.
    pub fn element(&self, e: usize) -> (f64, f64) {
        (self.nodes[e], self.nodes[e + 1])
    }

    /// Indices of nodes strictly inside `Ω`.
    pub fn interior_dofs(&self) -> &[usize] {
        &self.interior
    }

    /// Indices of all nodes that carry a hat function (every node but the
    /// two ends of the mesh).
    pub fn free_dofs(&self) -> Vec<usize> {
        (1..self.nodes.len() - 1).collect()
    }

    /// Free nodes outside `Ω`, including `Ω`'s endpoints when they are free.
    pub fn exterior_dofs(&self) -> Vec<usize> {
        self.free_dofs()
            .into_iter()
            .filter(|&i| !self.omega.contains(self.nodes[i]))
            .collect()
    }

    /// Whether element `e` lies inside `Ω`.
    pub fn element_in_omega(&self, e: usize) -> bool {
        let (a, b) = self.element(e);
        a >= self.omega.lo && b <= self.omega.hi
    }

    /// Largest element length inside `Ω`.
    pub fn h_max(&self) -> f64 {
        (0..self.n_elements())
            .filter(|&e| self.element_in_omega(e))
            .map(|e| self.nodes[e + 1] - self.nodes[e])
            .fold(0.0, f64::max)
    }

    /// Smallest element length inside `Ω`.
    pub fn h_min(&self) -> f64 {
        (0..self.n_elements())
            .filter(|&e| self.element_in_omega(e))
            .map(|e| self.nodes[e + 1] - self.nodes[e])
            .fold(f64::INFINITY, f64::min)
    }

    /// The submesh covering `Ω` only.
    pub fn omega_mesh(&self) -> Self {
        let nodes: Vec<f64> = self
            .nodes
            .iter()
            .copied()
            .filter(|&x| x >= self.omega.lo && x <= self.omega.hi)
            .collect();
        Self::from_nodes(nodes, self.omega).expect("omega endpoints are nodes")
    }

    /// Nodal values of `f` at the mesh nodes.
    pub fn interpolate(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        self.nodes.iter().map(|&x| f(x)).collect()
    }

    /// Evaluates the piecewise-linear function with nodal values `u` at `x`
    /// (zero outside the mesh).
    pub fn evaluate(&self, u: &[f64], x: f64) -> f64 {
        let n = self.nodes.len();
        if x < self.nodes[0] || x > self.nodes[n - 1] {
            return 0.0;
        }
        let k = self.nodes.partition_point(|&y| y <= x).clamp(1, n - 1);
        let (a, b) = (self.nodes[k - 1], self.nodes[k]);
        let t = (x - a) / (b - a);
        u[k - 1] * (1.0 - t) + u[k] * t
    }

    /// SHA-256 of the node coordinates and `Ω`, as lowercase hex.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.omega.lo.to_le_bytes());
        h.update(self.omega.hi.to_le_bytes());
        for x in &self.nodes {
            h.update(x.to_le_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn graded_nodes(omega: Interval, elements: usize, grading: f64) -> Result<Vec<f64>> {
    if elements < 2 {
        return Err(domain("a mesh of omega needs at least two elements"));
    }
    if !(grading >= 1.0) {
        return Err(domain(format!("mesh grading must be >= 1, got {grading}")));
    }
    let c = 0.5 * (omega.lo + omega.hi);
    let r = 0.5 * omega.length();
    let mut nodes: Vec<f64> = (0..=elements)
        .map(|i| {
            let xi = -1.0 + 2.0 * i as f64 / elements as f64;
            c + r * xi.signum() * xi.abs().powf(grading)
        })
        .collect();
    nodes[0] = omega.lo;
    nodes[elements] = omega.hi;
    Ok(nodes)
}

/// Nodes strictly between `from` and `to` (excluded), with element length
/// starting at `h` and doubling away from `from`, ending on `to`.
fn bridge(from: f64, to: f64, h: f64) -> Vec<f64> {
    let dist = (to - from).abs();
    if dist == 0.0 {
        return Vec::new();
    }
    let dir = (to - from).signum();
    let mut out = Vec::new();
    let mut pos = 0.0;
    let mut step = h;
    while pos + 1.5 * step < dist {
        pos += step;
        out.push(from + dir * pos);
        step *= 2.0;
    }
    out.push(to);
    out
}
