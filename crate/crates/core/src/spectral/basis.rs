use std::ops::Range;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::nonlocal::{assemble_mass, Mesh, StiffnessMatrix};

/// Relative eigenvalue gap below which modes are treated as one cluster.
pub const CLUSTER_GAP: f64 = 1e-8;

/// The first `n_max` Dirichlet eigenpairs `A φ = λ M φ` on the interior dofs
/// of a mesh, mass-orthonormal and sorted by `λ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralBasis {
    pub lambdas: Vec<f64>,
    /// Column `n` holds `φ_n` on the interior dofs.
    pub modes: DMatrix<f64>,
    /// Mass matrix over the interior dofs.
    pub mass: DMatrix<f64>,
    pub s: f64,
    pub mesh: Mesh,
    /// Index ranges of numerically degenerate eigenvalues.
    pub clusters: Vec<Range<usize>>,
}

/// Solves the generalized eigenproblem through `M = L Lᵀ` and a dense
/// symmetric eigensolve of `L⁻¹ A L⁻ᵀ`.
pub fn eigenpairs(mesh: &Mesh, stiffness: &StiffnessMatrix, n_max: usize) -> Result<SpectralBasis> {
    let dofs = mesh.interior_dofs();
    if n_max == 0 || n_max > dofs.len() {
        return Err(domain(format!(
            "n_max must lie in 1..={}, got {n_max}",
            dofs.len()
        )));
    }
    let a = stiffness.block(dofs, dofs)?;
    let mass = assemble_mass(mesh, dofs)?;
    let chol = mass
        .clone()
        .cholesky()
        .ok_or_else(|| Error::Solver("mass matrix is not positive definite".into()))?;
    let l = chol.l();
    let l_inv = l
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Solver("singular mass factor".into()))?;
    let mut c = &l_inv * &a * l_inv.transpose();
    c = (&c + c.transpose()) * 0.5;
    let eig = c
        .try_symmetric_eigen(f64::EPSILON, 0)
        .ok_or_else(|| Error::Solver("symmetric eigensolver did not converge".into()))?;

    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    order.truncate(n_max);
    let lambdas: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    if !(lambdas[0] > 0.0) {
        return Err(Error::Solver(format!("non-positive eigenvalue {}", lambdas[0])));
    }
    let y = DMatrix::from_fn(dofs.len(), n_max, |r, k| eig.eigenvectors[(r, order[k])]);
    let mut modes = l_inv.transpose() * y;

    let clusters = clusters_of(&lambdas);
    for range in &clusters {
        if range.len() > 1 {
            mass_orthonormalize(&mut modes, &mass, range.clone());
        }
    }
    for k in 0..n_max {
        normalize_sign(&mut modes, k);
    }
    Ok(SpectralBasis {
        lambdas,
        modes,
        mass,
        s: stiffness.s,
        mesh: mesh.clone(),
        clusters,
    })
}

fn clusters_of(lambdas: &[f64]) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=lambdas.len() {
        if k == lambdas.len() || (lambdas[k] - lambdas[k - 1]) > CLUSTER_GAP * lambdas[k].abs() {
            out.push(start..k);
            start = k;
        }
    }
    out
}

fn mass_orthonormalize(modes: &mut DMatrix<f64>, mass: &DMatrix<f64>, range: Range<usize>) {
    for k in range.clone() {
        let mut v = modes.column(k).into_owned();
        for j in range.start..k {
            let q = modes.column(j).into_owned();
            let proj = (q.transpose() * mass * &v)[0];
            v -= q * proj;
        }
        let norm = (v.transpose() * mass * &v)[0].sqrt();
        modes.set_column(k, &(v / norm));
    }
}

/// Makes the largest-magnitude entry (first one on ties) positive.
fn normalize_sign(modes: &mut DMatrix<f64>, k: usize) {
    let col = modes.column(k);
    let mut best = 0;
    for i in 1..col.len() {
        if col[i].abs() > col[best].abs() {
            best = i;
        }
    }
    if col[best] < 0.0 {
        modes.column_mut(k).neg_mut();
    }
}

/// Result of [`SpectralBasis::fractional_power_apply`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerApplied {
    /// Nodal values on every mesh node.
    pub values: Vec<f64>,
    /// `‖u - P u‖²_M / ‖u‖²_M`, `P` the projector onto the computed modes.
    pub unresolved: f64,
}

/// Unresolved mass above which callers should warn.
pub const UNRESOLVED_WARNING: f64 = 1e-6;

impl SpectralBasis {
    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// `φ_n` on every mesh node (zero outside `Ω`).
    pub fn nodal_mode(&self, n: usize) -> Vec<f64> {
        self.to_nodal(&self.modes.column(n).into_owned())
    }

    /// Interior-dof vector to nodal values on every mesh node.
    pub fn to_nodal(&self, interior: &DVector<f64>) -> Vec<f64> {
        let mut out = vec![0.0; self.mesh.n_nodes()];
        for (k, &i) in self.mesh.interior_dofs().iter().enumerate() {
            out[i] = interior[k];
        }
        out
    }

    fn interior(&self, u: &[f64]) -> Result<DVector<f64>> {
        if u.len() != self.mesh.n_nodes() {
            return Err(Error::Dimension(format!(
                "{} values on a mesh of {} nodes",
                u.len(),
                self.mesh.n_nodes()
            )));
        }
        let dofs = self.mesh.interior_dofs();
        Ok(DVector::from_iterator(dofs.len(), dofs.iter().map(|&i| u[i])))
    }

    /// Mode coefficients `(u, φ_n)_M` of nodal data `u`.
    pub fn coefficients(&self, u: &[f64]) -> Result<DVector<f64>> {
        let ui = self.interior(u)?;
        Ok(self.modes.transpose() * (&self.mass * ui))
    }

    /// Nodal function `Σ c_n φ_n`.
    pub fn synthesize(&self, c: &DVector<f64>) -> Result<Vec<f64>> {
        if c.len() != self.len() {
            return Err(Error::Dimension(format!(
                "{} coefficients for {} modes",
                c.len(),
                self.len()
            )));
        }
        Ok(self.to_nodal(&(&self.modes * c)))
    }

    /// `‖u - P u‖²_M / ‖u‖²_M` (zero for `u = 0`).
    pub fn unresolved_mass(&self, u: &[f64]) -> Result<f64> {
        let ui = self.interior(u)?;
        let total = (ui.transpose() * &self.mass * &ui)[0];
        if total == 0.0 {
            return Ok(0.0);
        }
        let c = self.modes.transpose() * (&self.mass * &ui);
        Ok(((total - c.norm_squared()) / total).max(0.0))
    }

    /// `Σ_n λ_n^γ (u, φ_n)_M φ_n`.
    pub fn fractional_power_apply(&self, gamma: f64, u: &[f64]) -> Result<PowerApplied> {
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(domain(format!("power must be non-negative, got {gamma}")));
        }
        let mut c = self.coefficients(u)?;
        for (cn, &l) in c.iter_mut().zip(&self.lambdas) {
            *cn *= l.powf(gamma);
        }
        Ok(PowerApplied {
            values: self.synthesize(&c)?,
            unresolved: self.unresolved_mass(u)?,
        })
    }

    /// `max |Φᵀ M Φ - I|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let g = self.modes.transpose() * &self.mass * &self.modes;
        let n = g.nrows();
        (g - DMatrix::identity(n, n)).amax()
    }

    /// Cluster containing mode `n`.
    pub fn cluster_of(&self, n: usize) -> Range<usize> {
        self.clusters
            .iter()
            .find(|r| r.contains(&n))
            .cloned()
            .unwrap_or(n..n + 1)
    }

    /// SHA-256 over the mesh hash, `s` and the eigenpairs.
    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(self.mesh.hash().as_bytes());
        h.update(self.s.to_le_bytes());
        for l in &self.lambdas {
            h.update(l.to_le_bytes());
        }
        for v in self.modes.iter() {
            h.update(v.to_le_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonlocal::{assemble_stiffness, Interval};

    fn basis(n: usize) -> SpectralBasis {
        let mesh = Mesh::uniform(Interval::new(-1.0, 1.0).unwrap(), 64).unwrap();
        let a = assemble_stiffness(&mesh, 0.5).unwrap();
        eigenpairs(&mesh, &a, n).unwrap()
    }

    #[test]
    fn eigenpairs_are_sorted_orthonormal_and_accurate() {
        let mesh = Mesh::uniform(Interval::new(-1.0, 1.0).unwrap(), 64).unwrap();
        let a = assemble_stiffness(&mesh, 0.5).unwrap();
        let b = eigenpairs(&mesh, &a, 12).unwrap();
        assert!(b.lambdas[0] > 0.0);
        assert!(b.lambdas.windows(2).all(|w| w[0] <= w[1]));
        assert!(b.orthonormality_defect() < 1e-10);
        let ai = a.block(mesh.interior_dofs(), mesh.interior_dofs()).unwrap();
        for n in 0..12 {
            let phi = b.modes.column(n);
            let r = &ai * phi - (&b.mass * phi) * b.lambdas[n];
            assert!(r.norm() < 1e-8 * b.lambdas[n], "{n}: {}", r.norm());
            let rq = (phi.transpose() * &ai * phi)[0];
            assert!((rq - b.lambdas[n]).abs() < 1e-10 * b.lambdas[n]);
        }
    }

    #[test]
    fn signs_are_normalized() {
        let b = basis(6);
        for n in 0..6 {
            let col = b.modes.column(n);
            assert!(col.max() >= -col.min());
        }
        // the ground state does not change sign
        assert!(b.modes.column(0).iter().all(|&v| v > 0.0));
    }

    #[test]
    fn powers_of_modes() {
        let b = basis(10);
        let phi3 = b.nodal_mode(2);
        let id = b.fractional_power_apply(0.0, &phi3).unwrap();
        for (a, c) in id.values.iter().zip(&phi3) {
            assert!((a - c).abs() < 1e-10);
        }
        assert!(id.unresolved < 1e-12);
        let phi2 = b.nodal_mode(1);
        let p = b.fractional_power_apply(1.0, &phi2).unwrap();
        for (a, c) in p.values.iter().zip(&phi2) {
            assert!((a - b.lambdas[1] * c).abs() < 1e-10 * b.lambdas[1]);
        }
    }

    #[test]
    fn half_powers_compose() {
        let b = basis(10);
        let c = DVector::from_fn(10, |i, _| 1.0 / (1.0 + i as f64));
        let u = b.synthesize(&c).unwrap();
        let half = b.fractional_power_apply(0.5, &u).unwrap().values;
        let twice = b.fractional_power_apply(0.5, &half).unwrap().values;
        let once = b.fractional_power_apply(1.0, &u).unwrap().values;
        for (a, c) in twice.iter().zip(&once) {
            assert!((a - c).abs() < 1e-10 * (1.0 + c.abs()));
        }
    }

    #[test]
    fn unresolved_mass_is_reported() {
        let b = basis(3);
        let u = b.mesh.interpolate(|x| (1.0 - x * x).max(0.0) * x.sin() * 40.0);
        assert!(b.fractional_power_apply(1.0, &u).unwrap().unresolved > UNRESOLVED_WARNING);
    }

    #[test]
    fn clusters_split_on_relative_gaps() {
        let c = clusters_of(&[1.0, 2.0, 2.0 + 1e-12, 3.0]);
        assert_eq!(c, vec![0..1, 1..3, 3..4]);
    }
}
