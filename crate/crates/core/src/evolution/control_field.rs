use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::nonlocal::Interval;
use crate::spectral::ExteriorTraceTable;

/// Piece of a piecewise-linear function: linear from `(a, va)` to `(b, vb)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: f64,
    pub b: f64,
    pub va: f64,
    pub vb: f64,
}

impl Segment {
    fn at(&self, t: f64) -> f64 {
        self.va + (self.vb - self.va) * (t - self.a) / (self.b - self.a)
    }
}

/// Temporal factors `ψ_j` on `(0, T)`. All are piecewise linear, so
/// convolutions against the relaxation kernel are exact.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TimeBasis {
    /// Indicators of `panels` equal panels. With `smooth`, the first and
    /// last panel carry no basis function, so controls vanish near `0` and `T`.
    PiecewiseConstant { t_final: f64, panels: usize, smooth: bool },
    /// Hats at the interior nodes of `panels` equal panels; with `smooth`,
    /// also none touching the first or last panel.
    Hat { t_final: f64, panels: usize, smooth: bool },
    /// A single `sin²` bump on `(start, end)`, interpolated at `samples`
    /// equal sub-intervals.
    Bump { start: f64, end: f64, samples: usize },
}

impl TimeBasis {
    pub fn validate(&self, t_final: f64) -> Result<()> {
        match *self {
            TimeBasis::PiecewiseConstant { t_final: t, panels, smooth }
            | TimeBasis::Hat { t_final: t, panels, smooth } => {
                if (t - t_final).abs() > 1e-12 * t_final {
                    return Err(domain(format!("time basis built for T = {t}, not {t_final}")));
                }
                let min = match (self, smooth) {
                    (TimeBasis::PiecewiseConstant { .. }, false) => 1,
                    (TimeBasis::PiecewiseConstant { .. }, true) => 3,
                    (_, false) => 2,
                    (_, true) => 4,
                };
                if panels < min {
                    return Err(domain(format!("time basis needs at least {min} panels")));
                }
            }
            TimeBasis::Bump { start, end, samples } => {
                if !(0.0 <= start && start < end && end <= t_final) || samples < 2 {
                    return Err(domain("bump must satisfy 0 <= start < end <= T with samples >= 2"));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        match *self {
            TimeBasis::PiecewiseConstant { panels, smooth, .. } => {
                if smooth {
                    panels.saturating_sub(2)
                } else {
                    panels
                }
            }
            TimeBasis::Hat { panels, smooth, .. } => {
                if smooth {
                    panels.saturating_sub(3)
                } else {
                    panels.saturating_sub(1)
                }
            }
            TimeBasis::Bump { .. } => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Segments of `ψ_j`, ordered in time.
    pub fn segments(&self, j: usize) -> Vec<Segment> {
        match *self {
            TimeBasis::PiecewiseConstant { t_final, panels, smooth } => {
                let h = t_final / panels as f64;
                let p = j + usize::from(smooth);
                vec![Segment {
                    a: p as f64 * h,
                    b: if p + 1 == panels { t_final } else { (p + 1) as f64 * h },
                    va: 1.0,
                    vb: 1.0,
                }]
            }
            TimeBasis::Hat { t_final, panels, smooth } => {
                let h = t_final / panels as f64;
                let node = j + 1 + usize::from(smooth);
                let at = |k: usize| if k == panels { t_final } else { k as f64 * h };
                vec![
                    Segment { a: at(node - 1), b: at(node), va: 0.0, vb: 1.0 },
                    Segment { a: at(node), b: at(node + 1), va: 1.0, vb: 0.0 },
                ]
            }
            TimeBasis::Bump { start, end, samples } => {
                let h = (end - start) / samples as f64;
                let at = |k: usize| if k == samples { end } else { start + k as f64 * h };
                let f = |t: f64| (std::f64::consts::PI * (t - start) / (end - start)).sin().powi(2);
                (0..samples)
                    .map(|k| {
                        let (a, b) = (at(k), at(k + 1));
                        Segment { a, b, va: if k == 0 { 0.0 } else { f(a) }, vb: if k + 1 == samples { 0.0 } else { f(b) } }
                    })
                    .collect()
            }
        }
    }

    /// `ψ_j(t)`, taking the right limit at jumps (left limit at the end).
    pub fn eval(&self, j: usize, t: f64) -> f64 {
        eval_segments(&self.segments(j), t, true)
    }

    /// One-sided value: `right = true` gives `ψ_j(t+)`, else `ψ_j(t-)`.
    pub fn eval_side(&self, j: usize, t: f64, right: bool) -> f64 {
        eval_segments(&self.segments(j), t, right)
    }

    /// Times where some `ψ_j` has a kink or jump.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut out: Vec<f64> = (0..self.len())
            .flat_map(|j| self.segments(j))
            .flat_map(|s| [s.a, s.b])
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }
}

fn eval_segments(segs: &[Segment], t: f64, right: bool) -> f64 {
    for s in segs {
        let inside = if right { s.a <= t && t < s.b } else { s.a < t && t <= s.b };
        if inside {
            return s.at(t);
        }
    }
    0.0
}

/// Spatial factors `χ_m`: hats at the interior nodes of a uniform partition
/// of each control interval into `elements` elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceBasis {
    pub control_set: Vec<Interval>,
    pub elements: usize,
}

impl SpaceBasis {
    pub fn new(control_set: Vec<Interval>, elements: usize) -> Result<Self> {
        if elements < 2 {
            return Err(domain("spatial control basis needs at least two elements per interval"));
        }
        let mut control_set = control_set;
        control_set.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        Ok(Self {
            control_set,
            elements,
        })
    }

    pub fn len(&self) -> usize {
        self.control_set.len() * (self.elements - 1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Centre and half-width of `χ_m`.
    pub fn hat(&self, m: usize) -> (f64, f64) {
        let per = self.elements - 1;
        let o = self.control_set[m / per];
        let h = o.length() / self.elements as f64;
        (o.lo + h * (m % per + 1) as f64, h)
    }

    pub fn eval(&self, m: usize, x: f64) -> f64 {
        let (c, h) = self.hat(m);
        (1.0 - (x - c).abs() / h).max(0.0)
    }

    /// `S[n][m] = (χ_m, N_s φ_n)_{L²(O)}` with the trace table's quadrature.
    /// Fails if the table's points do not cover the hats.
    pub fn trace_pairing(&self, traces: &ExteriorTraceTable) -> Result<nalgebra::DMatrix<f64>> {
        let chi = nalgebra::DMatrix::from_fn(traces.points.len(), self.len(), |q, m| {
            traces.weights[q] * self.eval(m, traces.points[q])
        });
        for m in 0..self.len() {
            let (_, h) = self.hat(m);
            let mass = chi.column(m).sum();
            if ((mass - h) / h).abs() > 1e-2 {
                return Err(domain(format!(
                    "trace points do not cover control hat {m} (mass {mass} vs {h})"
                )));
            }
        }
        Ok(&traces.table * chi)
    }
}

/// A tensor basis `ψ_j(t) χ_m(x)` of controls supported in `(0, T) × O`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControlBasis {
    pub time: TimeBasis,
    pub space: SpaceBasis,
}

impl ControlBasis {
    /// Number of basis controls; column `(j, m)` has index `j · n_space + m`.
    pub fn len(&self) -> usize {
        self.time.len() * self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `g(t, x) = Σ c[j][m] ψ_j(t) χ_m(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControlField {
    pub basis: ControlBasis,
    /// Row `j`, column `m`.
    pub coeffs: nalgebra::DMatrix<f64>,
}

impl ControlField {
    pub fn new(basis: ControlBasis, coeffs: nalgebra::DMatrix<f64>) -> Result<Self> {
        if coeffs.nrows() != basis.time.len() || coeffs.ncols() != basis.space.len() {
            return Err(Error::Dimension(format!(
                "coefficients are {}x{}, basis is {}x{}",
                coeffs.nrows(),
                coeffs.ncols(),
                basis.time.len(),
                basis.space.len()
            )));
        }
        Ok(Self { basis, coeffs })
    }

    pub fn zero(basis: ControlBasis) -> Self {
        let coeffs = nalgebra::DMatrix::zeros(basis.time.len(), basis.space.len());
        Self { basis, coeffs }
    }

    /// Coefficients from a flat vector ordered as the input-map columns.
    pub fn from_flat(basis: ControlBasis, flat: &[f64]) -> Result<Self> {
        let (nt, ns) = (basis.time.len(), basis.space.len());
        if flat.len() != nt * ns {
            return Err(Error::Dimension(format!("{} coefficients for {} basis controls", flat.len(), nt * ns)));
        }
        Ok(Self {
            coeffs: nalgebra::DMatrix::from_fn(nt, ns, |j, m| flat[j * ns + m]),
            basis,
        })
    }

    pub fn flat(&self) -> Vec<f64> {
        let (nt, ns) = (self.coeffs.nrows(), self.coeffs.ncols());
        (0..nt * ns).map(|k| self.coeffs[(k / ns, k % ns)]).collect()
    }

    pub fn eval(&self, t: f64, x: f64) -> f64 {
        let mut v = 0.0;
        for j in 0..self.coeffs.nrows() {
            let psi = self.basis.time.eval(j, t);
            if psi == 0.0 {
                continue;
            }
            for m in 0..self.coeffs.ncols() {
                v += self.coeffs[(j, m)] * psi * self.basis.space.eval(m, x);
            }
        }
        v
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            basis: self.basis.clone(),
            coeffs: &self.coeffs * k,
        }
    }

    /// Sum of two fields on the same basis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::Dimension("control fields live on different bases".into()));
        }
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: &self.coeffs + &other.coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_piecewise_constants_skip_end_panels() {
        let b = TimeBasis::PiecewiseConstant { t_final: 1.0, panels: 5, smooth: true };
        assert_eq!(b.len(), 3);
        assert_eq!(b.eval(0, 0.1), 0.0);
        assert_eq!(b.eval(0, 0.3), 1.0);
        assert_eq!(b.eval(2, 0.7), 1.0);
        assert_eq!(b.eval(2, 0.9), 0.0);
        b.validate(1.0).unwrap();
    }

    #[test]
    fn hats_and_bumps_are_continuous() {
        let h = TimeBasis::Hat { t_final: 2.0, panels: 4, smooth: false };
        assert_eq!(h.len(), 3);
        assert!((h.eval(0, 0.25) - 0.5).abs() < 1e-15);
        assert!((h.eval(0, 0.5) - 1.0).abs() < 1e-15);
        let bump = TimeBasis::Bump { start: 0.2, end: 0.8, samples: 60 };
        assert!((bump.eval(0, 0.5) - 1.0).abs() < 1e-15);
        assert_eq!(bump.eval(0, 0.2), 0.0);
        assert_eq!(bump.eval_side(0, 0.8, false), 0.0);
    }

    #[test]
    fn space_hats_partition_the_control_set() {
        let o = vec![Interval::new(1.5, 2.0).unwrap()];
        let s = SpaceBasis::new(o, 5).unwrap();
        assert_eq!(s.len(), 4);
        let total: f64 = (0..4).map(|m| s.eval(m, 1.75)).sum();
        assert!((total - 1.0).abs() < 1e-15);
        assert_eq!(s.eval(0, 1.5), 0.0);
    }

    #[test]
    fn flat_round_trip() {
        let basis = ControlBasis {
            time: TimeBasis::PiecewiseConstant { t_final: 1.0, panels: 3, smooth: false },
            space: SpaceBasis::new(vec![Interval::new(1.5, 2.0).unwrap()], 3).unwrap(),
        };
        let flat = vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let g = ControlField::from_flat(basis, &flat).unwrap();
        assert_eq!(g.coeffs[(1, 0)], 3.0);
        assert_eq!(g.flat(), flat);
    }
}
