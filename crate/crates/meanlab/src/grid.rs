use crate::error::{Error, Result};
use crate::interval::Interval;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Default seed for the random component of sample grids. Fixed so that every
/// report is reproducible byte-for-byte unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0x6d65616e;

/// Sample specification for grid-based checks: an `axis_points` x
/// `axis_points` uniform lattice over the domain square plus `random_pairs`
/// seeded uniform draws. Grid acceptance is a necessary condition only —
/// checks on samples never prove a property everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub axis_points: usize,
    pub random_pairs: usize,
    pub seed: u64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            axis_points: 101,
            random_pairs: 1000,
            seed: DEFAULT_SEED,
        }
    }
}

impl GridSpec {
    /// Uniform lattice only, no random component.
    pub fn lattice(axis_points: usize) -> Self {
        GridSpec {
            axis_points,
            random_pairs: 0,
            seed: DEFAULT_SEED,
        }
    }

    /// All sample pairs in deterministic order: lattice points in row-major
    /// (x, then y) order, then the seeded random pairs. Errors if the grid
    /// produces no off-diagonal point.
    pub fn pairs(&self, domain: &Interval) -> Result<Vec<(f64, f64)>> {
        let mut out = Vec::with_capacity(self.axis_points * self.axis_points + self.random_pairs);
        let axis = domain.uniform_points(self.axis_points);
        for &x in &axis {
            for &y in &axis {
                out.push((x, y));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for _ in 0..self.random_pairs {
            let x = rng.gen_range(domain.lo()..=domain.hi());
            let y = rng.gen_range(domain.lo()..=domain.hi());
            out.push((x, y));
        }
        if out.is_empty() {
            return Err(Error::BadGrid("no sample points".into()));
        }
        if out.iter().all(|&(x, y)| x == y) {
            return Err(Error::BadGrid("grid contains no off-diagonal point".into()));
        }
        Ok(out)
    }

    /// Uniform diagonal samples (t, t), used for diagonal restrictions.
    pub fn diagonal(&self, domain: &Interval) -> Result<Vec<f64>> {
        if self.axis_points < 2 {
            return Err(Error::BadGrid(
                "need at least 2 axis points for diagonal samples".into(),
            ));
        }
        Ok(domain.uniform_points(self.axis_points))
    }
}
