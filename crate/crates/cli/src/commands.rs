//! One function per subcommand. Each returns its artifacts and the
//! tolerance checks it ran; the runner writes them.

use fracctl::control::{
    assemble_input_map, controllability_sweep, synthesize_control, unique_continuation_probe, SweepSetup,
};
use fracctl::evolution::{
    adjoint_fractional_trace_modes, duality_gap, growth_ratios, solve_adjoint, solve_controlled, solve_full,
    solve_homogeneous, ControlBasis, ControlField, FracParams, SpaceBasis, TimeBasis,
};
use fracctl::io::{control_field_csv, csv_table, dense_to_bytes, trajectory_csv};
use fracctl::nonlocal::{assemble_stiffness, Interval, Mesh};
use fracctl::special_fn::{
    gamma, laplace_transform_residual, left_frac_integral, mittag_leffler, ml_time_kernel,
    relaxation, MlParams, TimeGrid,
};
use fracctl::spectral::eigenpairs;
use nalgebra::DVector;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

use crate::config::Config;
use crate::problem::{intervals, Problem};
use crate::RunError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Subcommand {
    MlTest,
    Eig,
    Forward,
    Adjoint,
    Duality,
    Control,
    Probe,
    /// Every subcommand, each into its own directory.
    All,
}

impl Subcommand {
    pub const EACH: [Subcommand; 7] = [
        Subcommand::MlTest,
        Subcommand::Eig,
        Subcommand::Forward,
        Subcommand::Adjoint,
        Subcommand::Duality,
        Subcommand::Control,
        Subcommand::Probe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Subcommand::MlTest => "ml-test",
            Subcommand::Eig => "eig",
            Subcommand::Forward => "forward",
            Subcommand::Adjoint => "adjoint",
            Subcommand::Duality => "duality",
            Subcommand::Control => "control",
            Subcommand::Probe => "probe",
            Subcommand::All => "all",
        }
    }
}

pub struct Artifact {
    pub name: String,
    pub bytes: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    /// Passes when `value <= tolerance`.
    fn at_most(name: &str, value: f64, tolerance: f64) -> Self {
        Check { name: name.into(), value, tolerance, passed: value <= tolerance }
    }

    /// Passes when `value >= tolerance`.
    fn at_least(name: &str, value: f64, tolerance: f64) -> Self {
        Check { name: name.into(), value, tolerance, passed: value >= tolerance }
    }
}

#[derive(Default)]
pub struct Outcome {
    pub artifacts: Vec<Artifact>,
    pub checks: Vec<Check>,
}

impl Outcome {
    fn json(&mut self, name: &str, value: &impl Serialize) -> Result<(), RunError> {
        let mut bytes = serde_json::to_vec_pretty(value)?;
        bytes.push(b'\n');
        self.artifacts.push(Artifact { name: name.into(), bytes });
        Ok(())
    }

    fn text(&mut self, name: &str, text: String) {
        self.artifacts.push(Artifact { name: name.into(), bytes: text.into_bytes() });
    }
}

pub fn execute(cmd: Subcommand, cfg: &Config, problem: Option<&Problem>) -> Result<Outcome, RunError> {
    let need = || problem.ok_or_else(|| RunError::Config(vec!["subcommand needs the spectral problem".into()]));
    match cmd {
        Subcommand::MlTest => ml_test(cfg),
        Subcommand::Eig => eig(cfg, need()?),
        Subcommand::Forward => forward(cfg, need()?),
        Subcommand::Adjoint => adjoint(cfg, need()?),
        Subcommand::Duality => duality(cfg, need()?),
        Subcommand::Control => control(cfg, need()?),
        Subcommand::Probe => probe(cfg, need()?),
        Subcommand::All => Err(RunError::Config(vec!["`all` is dispatched by the runner".into()])),
    }
}

fn params(cfg: &Config) -> Result<FracParams, RunError> {
    Ok(FracParams::new(cfg.params.alpha, cfg.params.s, cfg.params.t_final)?)
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn ml_test(cfg: &Config) -> Result<Outcome, RunError> {
    let tol = &cfg.tolerances;
    let mut out = Outcome::default();

    let e11 = MlParams::new(1.0, 1.0)?;
    let mut worst: f64 = 0.0;
    for i in 0..=3500 {
        let z = -30.0 + 0.01 * i as f64;
        worst = worst.max(rel(mittag_leffler(e11, z)?, z.exp()));
    }
    out.checks.push(Check::at_most("E_{1,1} vs exp on [-30, 5]", worst, tol.ml_exponential));

    let mut worst: f64 = 0.0;
    for a in [0.25, 0.5, 0.75, 1.0] {
        for b in [0.5, 1.0, 1.5, 2.0, 3.0] {
            worst = worst.max(rel(mittag_leffler(MlParams::new(a, b)?, 0.0)?, 1.0 / gamma(b)?));
        }
    }
    out.checks.push(Check::at_most("E_{a,b}(0) = 1/Gamma(b)", worst, tol.ml_origin));

    let mut worst: f64 = 0.0;
    for (a, lam) in [(0.3, 1.0), (0.5, 1.0), (0.5, 5.0), (0.8, 1.0), (0.8, 5.0)] {
        let grid = TimeGrid::graded(1.0, 200, 2.0 / a)?;
        let f = grid
            .nodes()
            .iter()
            .map(|&t| if t > 0.0 { ml_time_kernel(a, lam, t) } else { Ok(f64::INFINITY) })
            .collect::<Result<Vec<_>, _>>()?;
        let integral = left_frac_integral(&grid, &f, 1.0 - a)?;
        for (k, &t) in grid.nodes().iter().enumerate() {
            if t >= 0.1 {
                worst = worst.max(rel(integral[k], relaxation(a, lam, t)?));
            }
        }
    }
    out.checks.push(Check::at_most("I^{1-a} kernel = relaxation (graded grid, t >= 0.1)", worst, tol.relaxation_identity));

    let mut worst: f64 = 0.0;
    for (a, b, w, l) in [(0.5, 0.5, 1.0, 4.0), (1.0, 1.0, 2.0, 5.0), (0.9, 1.0, 0.5, 2.0)] {
        worst = worst.max(laplace_transform_residual(a, b, w, l)?);
    }
    out.checks.push(Check::at_most("Laplace transform quadrature residual", worst, tol.laplace));

    let mut worst: f64 = 0.0;
    for a in [0.4, 0.7, 1.0] {
        for lam in [1.0, 10.0, 100.0] {
            for i in 0..20 {
                let t = 0.05 + 0.95 * i as f64 / 19.0;
                let h = 1e-5 * t;
                let fd = (relaxation(a, lam, t + h)? - relaxation(a, lam, t - h)?) / (2.0 * h);
                worst = worst.max(rel(fd, -lam * ml_time_kernel(a, lam, t)?));
            }
        }
    }
    out.checks.push(Check::at_most("d/dt relaxation = -lambda kernel (t >= 0.05)", worst, tol.kernel_derivative));

    out.json("ml_report.json", &json!({ "checks": out.checks }))?;
    Ok(out)
}

fn eig(cfg: &Config, problem: &Problem) -> Result<Outcome, RunError> {
    let mut out = Outcome::default();
    let omega = Interval::new(cfg.domain.omega[0], cfg.domain.omega[1])?;
    let mut study = Vec::new();
    for &elements in &cfg.mesh.refinement {
        let mesh = Mesh::uniform(omega, elements)?;
        let a = assemble_stiffness(&mesh, cfg.params.s)?;
        let basis = eigenpairs(&mesh, &a, 3)?;
        study.push((elements, basis.lambdas));
    }
    let l1: Vec<f64> = study.iter().map(|s| s.1[0]).collect();
    let increase = l1.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max);
    let (r1, r2) = (2.0 * l1[1] - l1[0], 2.0 * l1[2] - l1[1]);
    out.checks.push(Check::at_most("lambda_1 decreases under refinement", increase, 0.0));
    out.checks.push(Check::at_most("Richardson limits agree", rel(r1, r2), cfg.tolerances.richardson));

    let basis = &problem.basis;
    let norms = problem.traces.norms();
    let rows: Vec<Vec<f64>> = (0..basis.len())
        .map(|n| vec![(n + 1) as f64, basis.lambdas[n], norms[n]])
        .collect();
    out.text(
        "eigenvalues.csv",
        csv_table(&["n".into(), "lambda".into(), "trace_norm".into()], &rows),
    );
    let nodal = nalgebra::DMatrix::from_fn(basis.mesh.n_nodes(), basis.len(), |i, n| basis.nodal_mode(n)[i]);
    out.artifacts.push(Artifact { name: "modes.bin".into(), bytes: dense_to_bytes(&nodal) });
    let report = json!({
        "s": cfg.params.s,
        "basis_hash": basis.hash(),
        "lambdas": basis.lambdas,
        "orthonormality_defect": basis.orthonormality_defect(),
        "refinement": study.iter().map(|(e, l)| json!({"elements": e, "lambdas": l})).collect::<Vec<_>>(),
        "richardson": [r1, r2],
        "checks": out.checks,
    });
    out.json("eig_report.json", &report)?;
    Ok(out)
}

fn bump_field(cfg: &Config, set: &[Interval], amplitude: f64) -> Result<ControlField, RunError> {
    let f = &cfg.forward;
    let basis = ControlBasis {
        time: TimeBasis::Bump { start: f.bump_start, end: f.bump_end, samples: f.bump_samples },
        space: SpaceBasis::new(set.to_vec(), f.space_elements)?,
    };
    let n = basis.len();
    Ok(ControlField::from_flat(basis, &vec![amplitude; n])?)
}

fn mode_datum(problem: &Problem, mode: usize) -> Vec<f64> {
    if mode == 0 {
        vec![0.0; problem.basis.mesh.n_nodes()]
    } else {
        problem.basis.nodal_mode(mode - 1)
    }
}

fn forward(cfg: &Config, problem: &Problem) -> Result<Outcome, RunError> {
    let p = params(cfg)?;
    let mut out = Outcome::default();
    let grid = if cfg.time.grading == 1.0 {
        TimeGrid::uniform(p.t_final, cfg.time.steps)?
    } else {
        TimeGrid::graded(p.t_final, cfg.time.steps, cfg.time.grading)?
    };
    let u0 = mode_datum(problem, cfg.forward.initial_mode);
    let g = bump_field(cfg, &problem.control_set, cfg.forward.control_amplitude)?;
    let traj = solve_full(&u0, &g, &p, &grid, &problem.basis, &problem.traces)?;
    let controlled = solve_controlled(&g, &p, &grid, &problem.basis, &problem.traces)?;
    let ratios = growth_ratios(&controlled, cfg.forward.growth_gamma);
    let finite = traj.mode_coeffs.iter().all(|v| v.is_finite());
    out.checks.push(Check::at_most("trajectory is finite", if finite { 0.0 } else { 1.0 }, 0.0));
    out.text("forward.csv", trajectory_csv(&traj, &problem.basis)?);
    let report = json!({
        "times": traj.times,
        "norms": traj.norms(),
        "controlled_norms": controlled.norms(),
        "growth_gamma": cfg.forward.growth_gamma,
        "growth_ratios": ratios,
        "max_growth_ratio": ratios.iter().copied().fold(0.0, f64::max),
        "unresolved_initial_mass": traj.unresolved,
        "checks": out.checks,
    });
    out.json("forward.json", &report)?;
    Ok(out)
}

fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let (mx, my) = (x.iter().sum::<f64>() / n, y.iter().sum::<f64>() / n);
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

fn adjoint(cfg: &Config, problem: &Problem) -> Result<Outcome, RunError> {
    let p = params(cfg)?;
    let mut out = Outcome::default();
    let grading = if cfg.adjoint.grading == 0.0 { 2.0 / p.alpha } else { cfg.adjoint.grading };
    let grid = TimeGrid::graded_toward_end(p.t_final, cfg.time.steps, grading)?;
    let u0t = problem.basis.nodal_mode(cfg.adjoint.terminal_mode - 1);
    let v = solve_adjoint(&u0t, &p, &grid, &problem.basis)?;

    let before: Vec<usize> = (0..v.times.len()).filter(|&k| v.times[k] < p.t_final).collect();
    let norms = v.norms();
    let (xs, ys): (Vec<f64>, Vec<f64>) = before[before.len().saturating_sub(cfg.adjoint.slope_points)..]
        .iter()
        .map(|&k| ((p.t_final - v.times[k]).ln(), norms[k].ln()))
        .unzip();
    let slope = if xs.len() >= 2 { least_squares_slope(&xs, &ys) } else { f64::NAN };
    let slope_err = (slope - (p.alpha - 1.0)).abs();
    out.checks.push(Check::at_most("log-log slope of |v| near T minus (alpha - 1)", if slope_err.is_nan() { f64::INFINITY } else { slope_err }, cfg.tolerances.adjoint_slope));

    let terminal = adjoint_fractional_trace_modes(&v, p.t_final)?;
    let trace_err = (&terminal - &v.data).amax();
    out.checks.push(Check::at_most("I^{1-alpha} v(T) recovers the terminal datum", trace_err, cfg.tolerances.terminal_trace));

    let trace_norms = v
        .times
        .iter()
        .map(|&t| Ok(adjoint_fractional_trace_modes(&v, t)?.norm()))
        .collect::<Result<Vec<f64>, RunError>>()?;
    let bound = trace_norms.iter().copied().fold(0.0, f64::max) / v.data.norm();

    out.text("adjoint.csv", trajectory_csv(&v, &problem.basis)?);
    let report = json!({
        "times": v.times,
        "norms": v.norms(),
        "fractional_trace_norms": trace_norms,
        "trace_bound_ratio": bound,
        "slope": slope,
        "slope_points": xs.len(),
        "expected_slope": p.alpha - 1.0,
        "terminal_trace_error": trace_err,
        "checks": out.checks,
    });
    out.json("adjoint.json", &report)?;
    Ok(out)
}

fn duality(cfg: &Config, problem: &Problem) -> Result<Outcome, RunError> {
    let p = params(cfg)?;
    let mut out = Outcome::default();
    let u0t = problem.basis.nodal_mode(cfg.duality.terminal_mode - 1);
    let amplitude = if cfg.duality.zero_control { 0.0 } else { 1.0 };
    let g = bump_field(cfg, &problem.control_set, amplitude)?;
    let mut rows = Vec::new();
    for &k in &cfg.duality.steps {
        let grid = TimeGrid::uniform(p.t_final, k)?;
        let r = duality_gap(&u0t, &g, &p, &grid, &problem.basis, &problem.traces)?;
        rows.push(vec![k as f64, r.state_pairing, r.control_pairing, r.gap, r.relative]);
    }
    let relative: Vec<f64> = rows.iter().map(|r| r[4]).collect();
    let orders: Vec<f64> = rows
        .windows(2)
        .map(|w| (w[0][4] / w[1][4]).ln() / (w[1][0] / w[0][0]).ln())
        .collect();
    let tol = if p.is_classical() { cfg.tolerances.duality_classical } else { cfg.tolerances.duality_fractional };
    out.checks.push(Check::at_most("relative duality gap on the finest grid", *relative.last().unwrap(), tol));
    if !cfg.duality.zero_control {
        let worst = orders.iter().copied().fold(f64::INFINITY, f64::min);
        out.checks.push(Check::at_least("observed order of the gap", worst, cfg.tolerances.duality_order));
    }
    out.text(
        "duality.csv",
        csv_table(
            &["steps", "state_pairing", "control_pairing", "gap", "relative"].map(String::from),
            &rows,
        ),
    );
    let report = json!({
        "alpha": p.alpha,
        "relative_gaps": relative,
        "gaps": rows.iter().map(|r| r[3]).collect::<Vec<_>>(),
        "orders": orders.iter().map(|o| if o.is_finite() { json!(o) } else { json!(null) }).collect::<Vec<_>>(),
        "zero_control": cfg.duality.zero_control,
        "checks": out.checks,
    });
    out.json("duality.json", &report)?;
    Ok(out)
}

fn tensor(cfg: &Config, set: &[Interval], panels: usize, elements: usize) -> Result<ControlBasis, RunError> {
    Ok(ControlBasis {
        time: TimeBasis::PiecewiseConstant { t_final: cfg.params.t_final, panels, smooth: cfg.control.smooth },
        space: SpaceBasis::new(set.to_vec(), elements)?,
    })
}

fn control(cfg: &Config, problem: &Problem) -> Result<Outcome, RunError> {
    let p = params(cfg)?;
    let c = &cfg.control;
    let tol = &cfg.tolerances;
    let mut out = Outcome::default();
    let n = problem.basis.len();
    let mut u1 = DVector::zeros(n);
    u1[c.target_mode - 1] = 1.0;
    let free = solve_homogeneous(
        &mode_datum(problem, c.initial_mode),
        &p,
        &TimeGrid::from_nodes(vec![0.0, p.t_final])?,
        &problem.basis,
    )?;
    let w_t = free.modes_at(1);

    let cb = tensor(cfg, &problem.control_set, c.time_panels, c.space_elements)?;
    let map = assemble_input_map(&cb, &p, &problem.basis, &problem.traces)?;
    let synthesis = synthesize_control(&map, &w_t, &u1, c.rho)?;
    let target = if p.is_classical() { tol.residual_classical } else { tol.residual_fractional };
    out.checks.push(Check::at_most("terminal residual / |u1|", synthesis.residual / u1.norm(), target));

    // the map is the forward solver restricted to t = T
    let mut rng = StdRng::seed_from_u64(cfg.run.seed);
    let grid = TimeGrid::uniform(p.t_final, c.time_panels)?;
    let mut consistency: f64 = 0.0;
    for _ in 0..c.consistency_samples {
        let coeffs: Vec<f64> = (0..map.n_controls()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let g = ControlField::from_flat(cb.clone(), &coeffs)?;
        let u = solve_controlled(&g, &p, &grid, &problem.basis, &problem.traces)?;
        let forward = u.modes_at(u.times.len() - 1);
        consistency = consistency.max((map.apply(&coeffs)? - &forward).amax() / forward.amax());
    }
    if c.consistency_samples > 0 {
        out.checks.push(Check::at_most("input map vs forward solver", consistency, tol.input_map));
    }

    let sweep = controllability_sweep(&SweepSetup {
        params: p,
        basis: &problem.basis,
        traces: &problem.traces,
        control_set: problem.control_set.clone(),
        time_panels: c.sweep_time_panels.clone(),
        space_elements: c.sweep_space_elements.clone(),
        smooth: c.smooth,
        w_t: w_t.clone(),
        u1: u1.clone(),
        rho: c.rho,
    })?;
    let mut violation = f64::NEG_INFINITY;
    for a in &sweep {
        for b in &sweep {
            let nested = b.time_panels % a.time_panels == 0 && b.space_elements % a.space_elements == 0;
            if nested && b.n_controls > a.n_controls {
                violation = violation.max(b.residual - a.residual);
            }
        }
    }
    if violation > f64::NEG_INFINITY {
        out.checks.push(Check::at_most("least-squares residual increase over nested bases", violation, tol.sweep_roundoff * u1.norm()));
    }
    let largest = sweep.iter().max_by_key(|s| s.n_controls).expect("sweep is not empty");
    out.checks.push(Check::at_most("largest sweep basis residual / |u1|", largest.regularized_residual / u1.norm(), target));

    let g = ControlField::from_flat(cb.clone(), &synthesis.coeffs)?;
    let times: Vec<f64> = (0..=100).map(|k| p.t_final * k as f64 / 100.0).collect();
    let points: Vec<f64> = problem
        .control_set
        .iter()
        .flat_map(|o| (0..=20).map(move |k| o.lo + o.length() * k as f64 / 20.0))
        .collect();
    out.text("control_field.csv", control_field_csv(&g, &times, &points));
    out.artifacts.push(Artifact { name: "input_map.bin".into(), bytes: dense_to_bytes(&map.b) });
    let report = json!({
        "alpha": p.alpha,
        "time_panels": c.time_panels,
        "space_elements": c.space_elements,
        "n_controls": map.n_controls(),
        "basis_hash": map.basis_hash,
        "synthesis": synthesis,
        "sweep": sweep,
        "checks": out.checks,
    });
    out.json("control.json", &report)?;
    Ok(out)
}

fn probe(cfg: &Config, problem: &Problem) -> Result<Outcome, RunError> {
    let mut out = Outcome::default();
    let mut reports = Vec::new();
    let mut sets = vec![cfg.domain.control_set.clone()];
    sets.extend(cfg.domain.probe_sets.iter().map(|s| vec![*s]));
    for raw in sets {
        let set = intervals(&raw)?;
        let traces = if raw == cfg.domain.control_set { problem.traces.clone() } else { problem.traces_on(&set)? };
        let report = unique_continuation_probe(&problem.basis, &traces, cfg.probe.n_max, cfg.probe.threshold);
        out.checks.push(Check {
            name: format!("min cluster trace norm on {raw:?}"),
            value: report.min_cluster_norm,
            tolerance: cfg.probe.threshold,
            passed: report.passed(),
        });
        reports.push(json!({ "control_set": raw, "report": report }));
    }
    out.json("probe.json", &json!({ "probes": reports, "checks": out.checks }))?;
    Ok(out)
}
