use fracctl::nonlocal::*;
use fracctl::spectral::*;

fn unit() -> Interval {
    Interval::new(-1.0, 1.0).unwrap()
}

fn lambda_1(elements: usize, s: f64) -> f64 {
    let mesh = Mesh::uniform(unit(), elements).unwrap();
    let a = assemble_stiffness(&mesh, s).unwrap();
    eigenpairs(&mesh, &a, 1).unwrap().lambdas[0]
}

/// Extrapolated limits from `(h, h/2)` and `(h/2, h/4)` for first-order
/// convergence.
fn richardson(l: &[f64; 3]) -> (f64, f64) {
    (2.0 * l[1] - l[0], 2.0 * l[2] - l[1])
}

#[test]
fn first_eigenvalue_converges_from_above() {
    for &s in &[0.3, 0.5, 0.8] {
        let l = [lambda_1(100, s), lambda_1(200, s), lambda_1(400, s)];
        assert!(l[0] > l[1] && l[1] > l[2] && l[2] > 0.0, "s = {s}: {l:?}");
        let (r1, r2) = richardson(&l);
        assert!(((r1 - r2) / r2).abs() < 5e-4, "s = {s}: {r1} vs {r2}");
    }
}

#[test]
fn first_eigenvalue_at_one_half_matches_the_literature() {
    // λ_1 of the half Laplacian on (-1, 1) (Kwaśnicki 2012)
    let reference = 1.1577738836977;
    let l = [lambda_1(100, 0.5), lambda_1(200, 0.5), lambda_1(400, 0.5)];
    let (_, r) = richardson(&l);
    assert!(((r - reference) / reference).abs() < 1e-5, "{r}");
}

#[test]
fn traces_of_eigenfunctions_do_not_vanish() {
    let mesh = Mesh::uniform(unit(), 200).unwrap();
    let a = assemble_stiffness(&mesh, 0.5).unwrap();
    let basis = eigenpairs(&mesh, &a, 20).unwrap();
    for o in [Interval::new(1.5, 2.0).unwrap(), Interval::new(1.5, 1.75).unwrap()] {
        let t = ExteriorTraceTable::on_control_set(
            &basis,
            &[o],
            &TraceQuadrature::default(),
            &NormalOptions::default(),
        )
        .unwrap();
        assert!(t.norms().iter().all(|&v| v > 1e-6), "{:?}", t.norms());
        assert!(t.table.row(0).iter().all(|&v| v < 0.0));
    }
}

#[test]
fn eigenpairs_on_the_extended_mesh_agree_with_omega_only() {
    let spec = DomainSpec::new(unit(), vec![Interval::new(1.5, 2.0).unwrap()], 10.0).unwrap();
    let ext = Mesh::extended(&spec, 64, 1.0, 0.03125).unwrap();
    let own = Mesh::uniform(unit(), 64).unwrap();
    let a = eigenpairs(&ext, &assemble_stiffness(&ext, 0.5).unwrap(), 5).unwrap();
    let b = eigenpairs(&own, &assemble_stiffness(&own, 0.5).unwrap(), 5).unwrap();
    for n in 0..5 {
        assert!(((a.lambdas[n] - b.lambdas[n]) / b.lambdas[n]).abs() < 1e-9);
    }
}
