use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Open interval `(lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(domain(format!("interval needs lo < hi, got ({lo}, {hi})")));
        }
        Ok(Self { lo, hi })
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    /// Distance from `x` to the closed interval.
    pub fn distance(&self, x: f64) -> f64 {
        if x < self.lo {
            self.lo - x
        } else if x > self.hi {
            x - self.hi
        } else {
            0.0
        }
    }

    fn overlaps(&self, other: &Interval) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }
}

/// The PDE domain `Ω`, the exterior control set `O` and the truncation box `B`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainSpec {
    pub omega: Interval,
    pub control_set: Vec<Interval>,
    pub truncation_box: Interval,
}

/// Default margin of the truncation box, in multiples of `|Ω|`.
pub const DEFAULT_PADDING: f64 = 10.0;

impl DomainSpec {
    /// Box padded by `padding · |Ω|` beyond `Ω ∪ O` on both sides.
    pub fn new(omega: Interval, control_set: Vec<Interval>, padding: f64) -> Result<Self> {
        if !(padding >= 0.0) {
            return Err(domain("padding must be non-negative"));
        }
        let lo = control_set.iter().map(|o| o.lo).fold(omega.lo, f64::min);
        let hi = control_set.iter().map(|o| o.hi).fold(omega.hi, f64::max);
        let pad = padding * omega.length();
        let spec = Self {
            omega,
            control_set,
            truncation_box: Interval::new(lo - pad, hi + pad)?,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks every invariant and reports all violations at once.
    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if !(self.omega.lo < self.omega.hi) {
            problems.push("omega must satisfy a < b".to_string());
        }
        if self.control_set.is_empty() {
            problems.push("control set is empty".to_string());
        }
        for (i, o) in self.control_set.iter().enumerate() {
            if !(o.lo < o.hi) {
                problems.push(format!("control interval {i} is empty"));
            }
            if o.overlaps(&self.omega) {
                problems.push(format!("control interval {i} intersects omega"));
            }
            for (j, p) in self.control_set.iter().enumerate().skip(i + 1) {
                if o.overlaps(p) {
                    problems.push(format!("control intervals {i} and {j} overlap"));
                }
            }
        }
        let b = &self.truncation_box;
        let lo = self.control_set.iter().map(|o| o.lo).fold(self.omega.lo, f64::min);
        let hi = self.control_set.iter().map(|o| o.hi).fold(self.omega.hi, f64::max);
        if b.lo > lo || b.hi < hi {
            problems.push("truncation box must contain omega and the control set".to_string());
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(domain(problems.join("; ")))
        }
    }

    pub fn in_control_set(&self, x: f64) -> bool {
        self.control_set.iter().any(|o| o.contains(x))
    }

    /// Same domain with the box margin doubled on both sides.
    pub fn with_doubled_box(&self) -> Self {
        let lo = self.control_set.iter().map(|o| o.lo).fold(self.omega.lo, f64::min);
        let hi = self.control_set.iter().map(|o| o.hi).fold(self.omega.hi, f64::max);
        let b = self.truncation_box;
        Self {
            truncation_box: Interval {
                lo: lo - 2.0 * (lo - b.lo),
                hi: hi + 2.0 * (b.hi - hi),
            },
            ..self.clone()
        }
    }
}
