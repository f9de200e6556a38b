//! Mesh, eigenbasis and trace tables shared by the subcommands, with an
//! optional on-disk cache keyed by the inputs that determine them.

use std::fs;
use std::path::Path;

use fracctl::nonlocal::{assemble_stiffness, Interval, Mesh, NormalOptions};
use fracctl::spectral::{eigenpairs, ExteriorTraceTable, SpectralBasis, TraceQuadrature};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::{hex, Config};
use crate::RunError;

pub struct Problem {
    pub basis: SpectralBasis,
    pub control_set: Vec<Interval>,
    pub traces: ExteriorTraceTable,
    pub quad: TraceQuadrature,
    /// Whether the basis came from the cache.
    pub cached: bool,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: String,
    basis: SpectralBasis,
    traces: ExteriorTraceTable,
}

pub fn intervals(raw: &[[f64; 2]]) -> Result<Vec<Interval>, RunError> {
    raw.iter()
        .map(|c| Interval::new(c[0], c[1]).map_err(RunError::Solver))
        .collect()
}

fn cache_key(cfg: &Config) -> String {
    let inputs = serde_json::json!({
        "version": env!("CARGO_PKG_VERSION"),
        "omega": cfg.domain.omega,
        "elements": cfg.mesh.elements,
        "s": cfg.params.s,
        "n_max": cfg.spectral.n_max,
        "control_set": cfg.domain.control_set,
        "trace_panels": cfg.spectral.trace_panels,
        "trace_points": cfg.spectral.trace_points,
    });
    hex(&Sha256::digest(inputs.to_string().as_bytes()))
}

impl Problem {
    pub fn build(cfg: &Config) -> Result<Self, RunError> {
        let control_set = intervals(&cfg.domain.control_set)?;
        let quad = TraceQuadrature {
            panels: cfg.spectral.trace_panels,
            points: cfg.spectral.trace_points,
        };
        let key = cache_key(cfg);
        let cache_file = (!cfg.run.cache.is_empty())
            .then(|| Path::new(&cfg.run.cache).join(format!("basis-{key}.json")));
        if let Some(file) = &cache_file {
            if let Ok(bytes) = fs::read(file) {
                // a stale or foreign entry is recomputed, never trusted
                if let Ok(entry) = serde_json::from_slice::<CacheEntry>(&bytes) {
                    if entry.key == key {
                        return Ok(Self {
                            basis: entry.basis,
                            control_set,
                            traces: entry.traces,
                            quad,
                            cached: true,
                        });
                    }
                }
            }
        }
        let omega = Interval::new(cfg.domain.omega[0], cfg.domain.omega[1])?;
        let mesh = Mesh::uniform(omega, cfg.mesh.elements)?;
        let stiffness = assemble_stiffness(&mesh, cfg.params.s)?;
        let basis = eigenpairs(&mesh, &stiffness, cfg.spectral.n_max)?;
        let traces = ExteriorTraceTable::on_control_set(&basis, &control_set, &quad, &NormalOptions::default())?;
        if let Some(file) = &cache_file {
            let entry = CacheEntry { key, basis, traces };
            fracctl::io::write_atomic(file, &serde_json::to_vec(&entry)?)?;
            return Ok(Self {
                basis: entry.basis,
                control_set,
                traces: entry.traces,
                quad,
                cached: false,
            });
        }
        Ok(Self { basis, control_set, traces, quad, cached: false })
    }

    pub fn traces_on(&self, set: &[Interval]) -> Result<ExteriorTraceTable, RunError> {
        Ok(ExteriorTraceTable::on_control_set(&self.basis, set, &self.quad, &NormalOptions::default())?)
    }
}
