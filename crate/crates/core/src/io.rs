//! Artifact formats: dense binary matrices, CSV tables and atomic writes.
//!
//! Dense binary layout: `rows: u64 LE`, `cols: u64 LE`, then `rows · cols`
//! row-major `f64 LE`. CSV numbers carry 17 significant digits.

use std::fs;
use std::io::Write;
use std::path::Path;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::evolution::{ControlField, Trajectory};
use crate::spectral::SpectralBasis;

pub fn dense_to_bytes(m: &DMatrix<f64>) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + 8 * m.len());
    out.extend_from_slice(&(m.nrows() as u64).to_le_bytes());
    out.extend_from_slice(&(m.ncols() as u64).to_le_bytes());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            out.extend_from_slice(&m[(i, j)].to_le_bytes());
        }
    }
    out
}

pub fn dense_from_bytes(bytes: &[u8]) -> Result<DMatrix<f64>> {
    let word = |k: usize| -> Result<[u8; 8]> {
        bytes
            .get(8 * k..8 * k + 8)
            .and_then(|b| b.try_into().ok())
            .ok_or_else(|| Error::InvalidData("truncated dense matrix".into()))
    };
    let rows = u64::from_le_bytes(word(0)?) as usize;
    let cols = u64::from_le_bytes(word(1)?) as usize;
    let expected = rows
        .checked_mul(cols)
        .and_then(|n| n.checked_mul(8))
        .and_then(|n| n.checked_add(16))
        .ok_or_else(|| Error::InvalidData("dense matrix dimensions overflow".into()))?;
    if bytes.len() != expected {
        return Err(Error::InvalidData(format!(
            "dense matrix {rows}x{cols} needs {expected} bytes, got {}",
            bytes.len()
        )));
    }
    let mut m = DMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = f64::from_le_bytes(word(2 + i * cols + j)?);
        }
    }
    Ok(m)
}

pub fn write_dense(path: &Path, m: &DMatrix<f64>) -> Result<()> {
    write_atomic(path, &dense_to_bytes(m))
}

pub fn read_dense(path: &Path) -> Result<DMatrix<f64>> {
    dense_from_bytes(&fs::read(path)?)
}

/// Writes through a sibling temporary file and a rename, so readers never
/// see a partial artifact.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = std::path::PathBuf::from(tmp);
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Header row plus one line per row.
pub fn csv_table(header: &[String], rows: &[Vec<f64>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        let line: Vec<String> = r.iter().map(|&v| fmt_f64(v)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Columns `t`, then the nodal values at every mesh node (headed `x=<node>`).
pub fn trajectory_csv(traj: &Trajectory, basis: &SpectralBasis) -> Result<String> {
    let mut header = vec!["t".to_string()];
    header.extend(basis.mesh.nodes().iter().map(|&x| format!("x={}", fmt_f64(x))));
    let rows = (0..traj.times.len())
        .map(|k| {
            let mut row = vec![traj.times[k]];
            row.extend(traj.nodal(basis, k)?);
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(csv_table(&header, &rows))
}

/// Columns `t, x, g` on the tensor grid `times × points`.
pub fn control_field_csv(g: &ControlField, times: &[f64], points: &[f64]) -> String {
    let header = ["t", "x", "g"].map(String::from);
    let rows: Vec<Vec<f64>> = times
        .iter()
        .flat_map(|&t| points.iter().map(move |&x| vec![t, x, g.eval(t, x)]))
        .collect();
    csv_table(&header, &rows)
}
