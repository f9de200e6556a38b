use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use super::assembly::StiffnessMatrix;
use super::domain::DomainSpec;
use super::mesh::Mesh;
use crate::error::{domain, Error, Result};

/// Discrete solution of `(-Δ)^s U = 0` in `Ω`, `U = g` outside `Ω`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicExtension {
    /// Nodal values on every mesh node.
    pub values: Vec<f64>,
    /// `sqrt(F(U, U)) / ‖g‖_{L²}` (reported only; `0` when `g = 0`).
    pub energy_ratio: f64,
}

/// Solves `A_II U_I = -A_IE g_E` on a mesh of the truncation box.
///
/// `g` holds nodal values on all mesh nodes; values inside `Ω` are ignored and
/// values outside the closure of the control set must vanish.
pub fn harmonic_extension(
    spec: &DomainSpec,
    mesh: &Mesh,
    stiffness: &StiffnessMatrix,
    g: &[f64],
) -> Result<HarmonicExtension> {
    if g.len() != mesh.n_nodes() {
        return Err(Error::Dimension(format!(
            "{} values on a mesh of {} nodes",
            g.len(),
            mesh.n_nodes()
        )));
    }
    if stiffness.dofs != mesh.free_dofs() {
        return Err(Error::Dimension("stiffness matrix was assembled on another mesh".into()));
    }
    let x = mesh.nodes();
    let interior = mesh.interior_dofs().to_vec();
    let exterior = mesh.exterior_dofs();
    for &i in &exterior {
        let inside_o = spec.control_set.iter().any(|o| x[i] >= o.lo && x[i] <= o.hi);
        if g[i] != 0.0 && !inside_o {
            return Err(domain(format!("exterior data is nonzero at x = {} outside O", x[i])));
        }
    }
    let a_ii = stiffness.block(&interior, &interior)?;
    let a_ie = stiffness.block(&interior, &exterior)?;
    let g_e = DVector::from_iterator(exterior.len(), exterior.iter().map(|&i| g[i]));
    let rhs = -(a_ie * &g_e);
    let chol = a_ii
        .cholesky()
        .ok_or_else(|| Error::Solver("interior stiffness block is not positive definite".into()))?;
    let u_i = chol.solve(&rhs);

    let mut values = vec![0.0; x.len()];
    for &i in &exterior {
        values[i] = g[i];
    }
    for (k, &i) in interior.iter().enumerate() {
        values[i] = u_i[k];
    }

    let free = mesh.free_dofs();
    let u_free = DVector::from_iterator(free.len(), free.iter().map(|&i| values[i]));
    let energy = (u_free.transpose() * &stiffness.matrix * &u_free)[0].max(0.0);
    let mass = super::assemble_mass(mesh, &free)?;
    let g_free = DVector::from_iterator(
        free.len(),
        free.iter().map(|&i| if mesh.omega().contains(x[i]) { 0.0 } else { g[i] }),
    );
    let g_norm = (g_free.transpose() * mass * &g_free)[0].max(0.0).sqrt();
    let energy_ratio = if g_norm > 0.0 { energy.sqrt() / g_norm } else { 0.0 };
    Ok(HarmonicExtension {
        values,
        energy_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonlocal::{assemble_stiffness, Interval};

    fn setup() -> (DomainSpec, Mesh, StiffnessMatrix) {
        let spec = DomainSpec::new(
            Interval::new(-1.0, 1.0).unwrap(),
            vec![Interval::new(1.5, 2.0).unwrap()],
            1.0,
        )
        .unwrap();
        let mesh = Mesh::extended(&spec, 16, 1.0, 0.1).unwrap();
        let a = assemble_stiffness(&mesh, 0.5).unwrap();
        (spec, mesh, a)
    }

    fn bump(x: f64) -> f64 {
        if x > 1.5 && x < 2.0 {
            (std::f64::consts::PI * (x - 1.5) / 0.5).sin()
        } else {
            0.0
        }
    }

    #[test]
    fn zero_data_extends_to_zero() {
        let (spec, mesh, a) = setup();
        let u = harmonic_extension(&spec, &mesh, &a, &vec![0.0; mesh.n_nodes()]).unwrap();
        assert!(u.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn extension_is_linear() {
        let (spec, mesh, a) = setup();
        let g1 = mesh.interpolate(bump);
        let g2 = mesh.interpolate(|x| bump(x) * (x - 1.5));
        let sum: Vec<f64> = g1.iter().zip(&g2).map(|(a, b)| a + 2.0 * b).collect();
        let u1 = harmonic_extension(&spec, &mesh, &a, &g1).unwrap().values;
        let u2 = harmonic_extension(&spec, &mesh, &a, &g2).unwrap().values;
        let u = harmonic_extension(&spec, &mesh, &a, &sum).unwrap().values;
        for i in 0..u.len() {
            assert!((u[i] - u1[i] - 2.0 * u2[i]).abs() < 1e-13);
        }
    }

    #[test]
    fn extension_is_weakly_harmonic() {
        let (spec, mesh, a) = setup();
        let g = mesh.interpolate(bump);
        let u = harmonic_extension(&spec, &mesh, &a, &g).unwrap();
        let free = mesh.free_dofs();
        let uf = DVector::from_iterator(free.len(), free.iter().map(|&i| u.values[i]));
        let r = &a.matrix * uf;
        for &i in mesh.interior_dofs() {
            let k = free.binary_search(&i).unwrap();
            assert!(r[k].abs() < 1e-13);
        }
        assert!(u.energy_ratio > 0.0 && u.energy_ratio.is_finite());
    }

    #[test]
    fn data_outside_the_control_set_is_rejected() {
        let (spec, mesh, a) = setup();
        let g = mesh.interpolate(|x| if x > 2.5 { 1.0 } else { 0.0 });
        assert!(harmonic_extension(&spec, &mesh, &a, &g).is_err());
    }
}
