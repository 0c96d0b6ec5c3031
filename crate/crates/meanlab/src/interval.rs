use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A closed bounded interval [lo, hi] with lo < hi.
///
/// All means in this crate are total on a host interval; evaluation outside
/// it is a contract violation, never extrapolated. Unbounded or degenerate
/// intervals are rejected at construction.
///
/// # Example
/// ```
/// use meanlab::Interval;
/// let d = Interval::new(0.0, 10.0).unwrap();
/// assert!(d.contains(10.0));
/// assert_eq!(d.length(), 10.0);
/// assert!(Interval::new(1.0, 1.0).is_err());
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Closed containment, endpoints included.
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `n` uniformly spaced points, first exactly `lo`, last exactly `hi`.
    pub fn uniform_points(&self, n: usize) -> Vec<f64> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![self.lo];
        }
        let step = self.length() / (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    self.hi
                } else {
                    self.lo + step * i as f64
                }
            })
            .collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
