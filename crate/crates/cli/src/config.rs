//! Experiment configuration: one TOML file of flat tables.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub params: Params,
    pub domain: Domain,
    pub mesh: MeshCfg,
    pub spectral: Spectral,
    pub time: Time,
    pub forward: Forward,
    pub adjoint: Adjoint,
    pub duality: Duality,
    pub control: Control,
    pub probe: Probe,
    pub tolerances: Tolerances,
    pub run: Run,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Params {
    pub alpha: f64,
    pub s: f64,
    pub t_final: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Domain {
    pub omega: [f64; 2],
    pub control_set: Vec<[f64; 2]>,
    /// Extra control sets, probed in addition to `control_set`.
    pub probe_sets: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MeshCfg {
    /// Uniform elements on Ω.
    pub elements: usize,
    /// Element counts of the eigenvalue refinement study (each doubling the last).
    pub refinement: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Spectral {
    pub n_max: usize,
    pub trace_panels: usize,
    pub trace_points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Time {
    pub steps: usize,
    /// Grading exponent of the forward grid toward `t = 0` (1 = uniform).
    pub grading: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Forward {
    /// Initial datum `φ_k` (1-based); 0 starts from rest.
    pub initial_mode: usize,
    /// Amplitude of the bump control on every hat; 0 switches it off.
    pub control_amplitude: f64,
    pub bump_start: f64,
    pub bump_end: f64,
    pub bump_samples: usize,
    pub space_elements: usize,
    pub growth_gamma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Adjoint {
    pub terminal_mode: usize,
    /// Slope fit uses this many grid nodes closest to (but before) `T`.
    pub slope_points: usize,
    /// Grading exponent toward `t = T`; 0 picks `2 / α`.
    pub grading: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Duality {
    pub terminal_mode: usize,
    /// Uniform grids of the refinement table.
    pub steps: Vec<usize>,
    pub zero_control: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Control {
    pub time_panels: usize,
    pub space_elements: usize,
    pub sweep_time_panels: Vec<usize>,
    pub sweep_space_elements: Vec<usize>,
    pub smooth: bool,
    pub rho: f64,
    /// Initial datum `φ_k` whose free evolution the control corrects; 0 = rest.
    pub initial_mode: usize,
    pub target_mode: usize,
    /// Random coefficient vectors for the input-map consistency check.
    pub consistency_samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Probe {
    pub n_max: usize,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    pub ml_exponential: f64,
    pub ml_origin: f64,
    pub relaxation_identity: f64,
    pub laplace: f64,
    pub kernel_derivative: f64,
    pub richardson: f64,
    pub adjoint_slope: f64,
    pub terminal_trace: f64,
    pub duality_classical: f64,
    pub duality_fractional: f64,
    pub duality_order: f64,
    pub input_map: f64,
    pub residual_classical: f64,
    pub residual_fractional: f64,
    pub sweep_roundoff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Run {
    pub seed: u64,
    pub out: String,
    /// Cache directory for eigenbases and trace tables; empty disables.
    pub cache: String,
}

impl Default for Params {
    fn default() -> Self {
        Self { alpha: 1.0, s: 0.5, t_final: 1.0 }
    }
}

impl Default for Domain {
    fn default() -> Self {
        Self {
            omega: [-1.0, 1.0],
            control_set: vec![[1.5, 2.0]],
            probe_sets: vec![[1.5, 1.75]],
        }
    }
}

impl Default for MeshCfg {
    fn default() -> Self {
        Self { elements: 100, refinement: vec![100, 200, 400] }
    }
}

impl Default for Spectral {
    fn default() -> Self {
        Self { n_max: 20, trace_panels: 40, trace_points: 4 }
    }
}

impl Default for Time {
    fn default() -> Self {
        Self { steps: 100, grading: 1.0 }
    }
}

impl Default for Forward {
    fn default() -> Self {
        Self {
            initial_mode: 1,
            control_amplitude: 1.0,
            bump_start: 0.2,
            bump_end: 0.8,
            bump_samples: 12,
            space_elements: 10,
            growth_gamma: 0.2,
        }
    }
}

impl Default for Adjoint {
    fn default() -> Self {
        Self { terminal_mode: 1, slope_points: 10, grading: 0.0 }
    }
}

impl Default for Duality {
    fn default() -> Self {
        Self { terminal_mode: 1, steps: vec![20, 40, 80, 160], zero_control: false }
    }
}

impl Default for Control {
    fn default() -> Self {
        Self {
            time_panels: 20,
            space_elements: 10,
            sweep_time_panels: vec![5, 10, 20, 40],
            sweep_space_elements: vec![5, 10],
            smooth: true,
            rho: 1e-8,
            initial_mode: 0,
            target_mode: 1,
            consistency_samples: 10,
        }
    }
}

impl Default for Probe {
    fn default() -> Self {
        Self { n_max: 20, threshold: 1e-6 }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            ml_exponential: 1e-12,
            ml_origin: 1e-13,
            relaxation_identity: 1e-5,
            laplace: 1e-6,
            kernel_derivative: 1e-5,
            richardson: 1e-3,
            adjoint_slope: 0.05,
            terminal_trace: 1e-6,
            duality_classical: 1e-4,
            duality_fractional: 1e-3,
            duality_order: 0.9,
            input_map: 1e-10,
            residual_classical: 0.1,
            residual_fractional: 0.2,
            sweep_roundoff: 1e-9,
        }
    }
}

impl Default for Run {
    fn default() -> Self {
        Self { seed: 20240601, out: "out".into(), cache: String::new() }
    }
}

impl Default for Config {
    fn default() -> Self {
        Self {
            params: Params::default(),
            domain: Domain::default(),
            mesh: MeshCfg::default(),
            spectral: Spectral::default(),
            time: Time::default(),
            forward: Forward::default(),
            adjoint: Adjoint::default(),
            duality: Duality::default(),
            control: Control::default(),
            probe: Probe::default(),
            tolerances: Tolerances::default(),
            run: Run::default(),
        }
    }
}

const SECTIONS: [(&str, &str); 12] = [
    ("params", "time order alpha in (0, 1], space order s in (0, 1), horizon T"),
    ("domain", "Ω and the exterior control set O as [lo, hi] intervals"),
    ("mesh", "uniform P1 mesh of Ω; refinement lists the eigenvalue study meshes"),
    ("spectral", "eigenpairs kept and the Gauss sampling of O (panels x points per interval)"),
    ("time", "forward grid: steps and grading exponent toward t = 0"),
    ("forward", "initial mode (1-based, 0 = rest) and a sin² bump control on (bump_start, bump_end)"),
    ("adjoint", "terminal mode, nodes in the slope fit near T, grading toward T (0 = 2/alpha)"),
    ("duality", "terminal mode and the uniform grids of the gap table"),
    ("control", "headline basis, nested sweep sizes, Tikhonov rho relative to |BᵀB|"),
    ("probe", "modes probed and the cluster trace-norm threshold"),
    ("tolerances", "pass/fail thresholds; a failed check exits with status 3"),
    ("run", "seed of randomized checks, output directory, cache directory (empty = off)"),
];

impl Config {
    pub fn from_toml(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    /// Canonical TOML form; the hash is taken over it.
    pub fn canonical(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Canonical form with the `[run]` output locations blanked, so the
    /// same experiment records the same bytes wherever it is written.
    pub fn recorded(&self) -> String {
        let mut c = self.clone();
        c.run.out.clear();
        c.run.cache.clear();
        c.canonical()
    }

    /// sha256 of [`Config::recorded`].
    pub fn hash(&self) -> String {
        hex(&Sha256::digest(self.recorded().as_bytes()))
    }

    /// Defaults as TOML, with one comment per table.
    pub fn defaults_dump() -> String {
        let value = toml::Value::try_from(Config::default()).expect("defaults serialize");
        let table = value.as_table().expect("config is a table");
        let mut out = String::new();
        for (name, doc) in SECTIONS {
            let mut single = toml::map::Map::new();
            single.insert(name.to_string(), table[name].clone());
            out.push_str(&format!("# {doc}\n"));
            out.push_str(&toml::to_string(&toml::Value::Table(single)).expect("section serializes"));
            out.push('\n');
        }
        out
    }

    /// Every violated constraint, or nothing.
    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        let mut need = |ok: bool, msg: String| {
            if !ok {
                v.push(msg);
            }
        };
        let p = &self.params;
        need(p.alpha > 0.0 && p.alpha <= 1.0, format!("params.alpha = {} not in (0, 1]", p.alpha));
        need(p.s > 0.0 && p.s < 1.0, format!("params.s = {} not in (0, 1)", p.s));
        need(p.t_final > 0.0 && p.t_final.is_finite(), format!("params.t_final = {} must be positive", p.t_final));

        let d = &self.domain;
        need(d.omega[0] < d.omega[1], format!("domain.omega = {:?} is empty", d.omega));
        need(!d.control_set.is_empty(), "domain.control_set is empty".into());
        for (name, sets) in [("control_set", &d.control_set), ("probe_sets", &d.probe_sets)] {
            for c in sets.iter() {
                need(c[0] < c[1], format!("domain.{name} interval {c:?} is empty"));
                need(
                    c[1] <= d.omega[0] || c[0] >= d.omega[1],
                    format!("domain.{name} interval {c:?} meets Ω"),
                );
            }
        }

        let m = &self.mesh;
        need((4..=1999).contains(&m.elements), format!("mesh.elements = {} not in 4..=1999", m.elements));
        need(m.refinement.len() == 3, format!("mesh.refinement needs three meshes, got {}", m.refinement.len()));
        need(
            m.refinement.windows(2).all(|w| w[1] == 2 * w[0]),
            format!("mesh.refinement = {:?} must double at every step", m.refinement),
        );
        need(
            m.refinement.iter().all(|&e| (4..=1999).contains(&e)),
            format!("mesh.refinement = {:?} not in 4..=1999", m.refinement),
        );

        let s = &self.spectral;
        need(
            s.n_max >= 1 && s.n_max < m.elements,
            format!("spectral.n_max = {} not in 1..{}", s.n_max, m.elements),
        );
        need(s.trace_panels >= 1 && s.trace_points >= 1, "spectral.trace_panels and trace_points must be positive".into());

        let t = &self.time;
        need((2..=100_000).contains(&t.steps), format!("time.steps = {} not in 2..=100000", t.steps));
        need(t.grading >= 1.0, format!("time.grading = {} below 1", t.grading));

        let f = &self.forward;
        need(f.initial_mode <= s.n_max, format!("forward.initial_mode = {} exceeds n_max", f.initial_mode));
        need(
            0.0 <= f.bump_start && f.bump_start < f.bump_end && f.bump_end <= p.t_final,
            format!("forward bump ({}, {}) not inside [0, T]", f.bump_start, f.bump_end),
        );
        need(f.bump_samples >= 2, "forward.bump_samples below 2".into());
        need(f.space_elements >= 2, "forward.space_elements below 2".into());
        need(f.growth_gamma.is_finite(), "forward.growth_gamma must be finite".into());

        let a = &self.adjoint;
        need((1..=s.n_max).contains(&a.terminal_mode), format!("adjoint.terminal_mode = {} not in 1..=n_max", a.terminal_mode));
        need(
            a.slope_points >= 2 && a.slope_points < t.steps,
            format!("adjoint.slope_points = {} not in 2..time.steps", a.slope_points),
        );
        need(a.grading == 0.0 || a.grading >= 1.0, format!("adjoint.grading = {} must be 0 or at least 1", a.grading));

        let du = &self.duality;
        need((1..=s.n_max).contains(&du.terminal_mode), format!("duality.terminal_mode = {} not in 1..=n_max", du.terminal_mode));
        need(du.steps.len() >= 2, "duality.steps needs at least two grids".into());
        need(du.steps.windows(2).all(|w| w[1] > w[0]), format!("duality.steps = {:?} must increase", du.steps));
        need(du.steps.iter().all(|&k| k >= 2), "duality.steps entries below 2".into());

        let c = &self.control;
        let min_panels = if c.smooth { 3 } else { 1 };
        need(c.time_panels >= min_panels, format!("control.time_panels = {} below {min_panels}", c.time_panels));
        need(c.space_elements >= 2, "control.space_elements below 2".into());
        need(!c.sweep_time_panels.is_empty() && !c.sweep_space_elements.is_empty(), "control sweep sizes are empty".into());
        need(c.sweep_time_panels.iter().all(|&k| k >= min_panels), format!("control.sweep_time_panels entries below {min_panels}"));
        need(c.sweep_space_elements.iter().all(|&k| k >= 2), "control.sweep_space_elements entries below 2".into());
        for (name, sizes) in [("sweep_time_panels", &c.sweep_time_panels), ("sweep_space_elements", &c.sweep_space_elements)] {
            need(
                sizes.windows(2).all(|w| w[0] > 0 && w[1] % w[0] == 0 && w[1] > w[0]),
                format!("control.{name} = {sizes:?} not nested"),
            );
        }
        need(c.rho >= 0.0 && c.rho.is_finite(), format!("control.rho = {} must be non-negative", c.rho));
        need(c.initial_mode <= s.n_max, format!("control.initial_mode = {} exceeds n_max", c.initial_mode));
        need((1..=s.n_max).contains(&c.target_mode), format!("control.target_mode = {} not in 1..=n_max", c.target_mode));

        let pr = &self.probe;
        need((1..=s.n_max).contains(&pr.n_max), format!("probe.n_max = {} not in 1..=spectral.n_max", pr.n_max));
        need(pr.threshold >= 0.0, "probe.threshold negative".into());

        let tol = &self.tolerances;
        for (name, value) in [
            ("ml_exponential", tol.ml_exponential),
            ("ml_origin", tol.ml_origin),
            ("relaxation_identity", tol.relaxation_identity),
            ("laplace", tol.laplace),
            ("kernel_derivative", tol.kernel_derivative),
            ("richardson", tol.richardson),
            ("adjoint_slope", tol.adjoint_slope),
            ("terminal_trace", tol.terminal_trace),
            ("duality_classical", tol.duality_classical),
            ("duality_fractional", tol.duality_fractional),
            ("duality_order", tol.duality_order),
            ("input_map", tol.input_map),
            ("residual_classical", tol.residual_classical),
            ("residual_fractional", tol.residual_fractional),
            ("sweep_roundoff", tol.sweep_roundoff),
        ] {
            need(value > 0.0 && value.is_finite(), format!("tolerances.{name} = {value} must be positive"));
        }
        v
    }
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid_and_round_trip() {
        let c = Config::default();
        assert!(c.validate().is_empty(), "{:?}", c.validate());
        let back = Config::from_toml(&Config::defaults_dump()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn every_violation_is_listed() {
        let c = Config::from_toml("[params]\nalpha = 1.5\ns = 1.0\n[mesh]\nelements = 2\n").unwrap();
        let v = c.validate();
        assert!(v.iter().any(|m| m.contains("alpha")));
        assert!(v.iter().any(|m| m.contains("params.s")));
        assert!(v.iter().any(|m| m.contains("mesh.elements")));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(Config::from_toml("[params]\nbeta = 1.0\n").is_err());
    }

    #[test]
    fn hash_ignores_output_locations() {
        let a = Config::default();
        let mut b = a.clone();
        b.run.out = "elsewhere".into();
        assert_eq!(a.hash(), b.hash());
        b.params.alpha = 0.5;
        assert_ne!(a.hash(), b.hash());
    }
}
