use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::commands::{execute, Check, Subcommand};
use crate::config::{hex, Config};
use crate::problem::Problem;
use crate::RunError;

#[derive(Debug, Clone, Serialize)]
pub struct ArtifactRecord {
    pub file: String,
    pub sha256: String,
    pub bytes: usize,
}

#[derive(Debug, Clone)]
pub struct RunSummary {
    pub out_dir: PathBuf,
    pub checks: Vec<(String, Check)>,
    pub artifacts: Vec<ArtifactRecord>,
}

impl RunSummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, c)| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            crate::EXIT_TOLERANCE
        }
    }
}

/// Validates `cfg`, runs `cmd` and writes artifacts plus `manifest.json`
/// under `cfg.run.out` (one directory per subcommand for `all`).
pub fn run(cmd: Subcommand, cfg: &Config) -> Result<RunSummary, RunError> {
    let problems = cfg.validate();
    if !problems.is_empty() {
        return Err(RunError::Config(problems));
    }
    let start = Instant::now();
    let out_dir = PathBuf::from(&cfg.run.out);
    let hash = cfg.hash();
    let problem = if cmd == Subcommand::MlTest { None } else { Some(Problem::build(cfg)?) };
    let cmds: Vec<Subcommand> = if cmd == Subcommand::All { Subcommand::EACH.to_vec() } else { vec![cmd] };

    let mut checks = Vec::new();
    let mut artifacts = Vec::new();
    let config_text = cfg.recorded();
    for c in cmds {
        let cell_start = Instant::now();
        let dir = if cmd == Subcommand::All { out_dir.join(c.name()) } else { out_dir.clone() };
        let outcome = execute(c, cfg, problem.as_ref())?;
        let mut records = Vec::new();
        for a in outcome.artifacts.iter().chain(std::iter::once(&crate::Artifact {
            name: "config.toml".into(),
            bytes: config_text.clone().into_bytes(),
        })) {
            fracctl::io::write_atomic(&dir.join(&a.name), &a.bytes)?;
            records.push(ArtifactRecord {
                file: relative(&dir.join(&a.name), &out_dir),
                sha256: hex(&Sha256::digest(&a.bytes)),
                bytes: a.bytes.len(),
            });
        }
        write_manifest(&dir, c, &hash, cell_start, &records, &outcome.checks, problem.as_ref())?;
        checks.extend(outcome.checks.into_iter().map(|k| (c.name().to_string(), k)));
        artifacts.extend(records);
    }
    if cmd == Subcommand::All {
        let flat: Vec<Check> = checks.iter().map(|(_, c)| c.clone()).collect();
        write_manifest(&out_dir, cmd, &hash, start, &artifacts, &flat, problem.as_ref())?;
    }
    Ok(RunSummary { out_dir, checks, artifacts })
}

fn relative(path: &Path, base: &Path) -> String {
    path.strip_prefix(base).unwrap_or(path).to_string_lossy().replace('\\', "/")
}

fn write_manifest(
    dir: &Path,
    cmd: Subcommand,
    hash: &str,
    start: Instant,
    records: &[ArtifactRecord],
    checks: &[Check],
    problem: Option<&Problem>,
) -> Result<(), RunError> {
    let manifest = json!({
        "tool": "fracctl",
        "version": env!("CARGO_PKG_VERSION"),
        "subcommand": cmd.name(),
        "config_hash": hash,
        "basis_hash": problem.map(|p| p.basis.hash()),
        "basis_from_cache": problem.map(|p| p.cached),
        "wall_time_seconds": start.elapsed().as_secs_f64(),
        "passed": checks.iter().all(|c| c.passed),
        "artifacts": records,
    });
    let mut bytes = serde_json::to_vec_pretty(&manifest)?;
    bytes.push(b'\n');
    fracctl::io::write_atomic(&dir.join("manifest.json"), &bytes)?;
    Ok(())
}
