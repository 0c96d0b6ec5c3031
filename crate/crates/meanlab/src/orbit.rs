//! Gauss-type iteration of a mean pair: (x, y) -> (M(x, y), N(x, y)).
//!
//! Mean bounds force the envelope sequences min(x_n, y_n) and max(x_n, y_n)
//! to be monotone (nondecreasing / nonincreasing), so both coordinates settle
//! between them. Convergence of the two coordinates to a *common* value is a
//! different matter: discontinuous pairs can keep a stubborn gap (the
//! `example31` pair's gap tends to 1 from above whenever it starts above 1),
//! which is exactly the phenomenon the rest of the crate measures. The
//! stopping rule therefore watches step movement and gap stabilization, not
//! gap size.
//!
//! One floating-point caveat, documented rather than hidden: with tolerances
//! much below ~1e-14 an orbit of a discontinuous pair can round *through* a
//! branch point (sqrt(1 + e) rounds to 1 once e < 2^-52) and collapse onto
//! the diagonal, changing the measured limits. The default gap_tol of 1e-12
//! stops well before that regime.

use crate::error::{Error, Result};
use crate::mean::{meet_join, MeanPair};
use serde::Serialize;

/// Stopping policy for orbit iteration.
///
/// Iteration stops as converged when one step moves both coordinates by less
/// than `gap_tol` *and* changes the envelope gap by less than `gap_tol` (or
/// when a step reproduces the pair bit for bit). It stops as nonconverged
/// when `max_steps` successor applications have been taken.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergencePolicy {
    pub gap_tol: f64,
    pub max_steps: usize,
    /// Full pairs stored up to this count; iteration beyond it still runs and
    /// only the trailing pairs go unrecorded.
    pub store_cap: usize,
}

impl Default for ConvergencePolicy {
    fn default() -> Self {
        ConvergencePolicy {
            gap_tol: 1e-12,
            max_steps: 100_000,
            store_cap: 10_000,
        }
    }
}

impl ConvergencePolicy {
    pub fn new(gap_tol: f64, max_steps: usize) -> Result<Self> {
        let p = ConvergencePolicy {
            gap_tol,
            max_steps,
            ..ConvergencePolicy::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gap_tol > 0.0) || !self.gap_tol.is_finite() {
            return Err(Error::InvalidPolicy(format!(
                "gap_tol must be a positive finite number, got {}",
                self.gap_tol
            )));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidPolicy("max_steps must be >= 1".into()));
        }
        if self.store_cap == 0 {
            return Err(Error::InvalidPolicy("store_cap must be >= 1".into()));
        }
        Ok(())
    }
}

/// A recorded orbit. `pairs()` always starts with the initial point and
/// satisfies, index by index, pairs[k+1] = (M(pairs[k]), N(pairs[k])) bit for
/// bit — traces are replayable. `steps()` counts successor applications;
/// an initial point that is already fixed converges at step 0.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitTrace {
    pairs: Vec<(f64, f64)>,
    final_pair: (f64, f64),
    steps: usize,
    converged: bool,
    final_gap: f64,
}

impl OrbitTrace {
    /// Stored prefix of the orbit (everything, unless `store_cap` truncated).
    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn final_pair(&self) -> (f64, f64) {
        self.final_pair
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    /// |x - y| at the final pair. Note that converged traces can have a
    /// large final gap — convergence is about the pair settling, not about
    /// the gap closing.
    pub fn final_gap(&self) -> f64 {
        self.final_gap
    }

    /// True when the orbit ran past `store_cap` and the tail is unrecorded.
    pub fn truncated(&self) -> bool {
        self.pairs.len() < self.steps + 1
    }

    /// Envelope at the final pair, ordered.
    pub fn final_envelope(&self) -> (f64, f64) {
        let (a, b) = self.final_pair;
        (a.min(b), a.max(b))
    }
}

/// Iterate the pair from (x, y) under `policy`.
///
/// Every step is checked against the current envelope: a value of M or N
/// outside [min(x_n, y_n), max(x_n, y_n)] means the pair is not actually a
/// pair of means there, and is reported as an error with the step index
/// rather than silently recorded. (Built-in means cannot trigger this; a
/// grid-validated expression mean can, off-grid.)
///
/// # Example
/// ```
/// use meanlab::{example_pair, orbit, Interval};
/// let pair = example_pair(Interval::new(0.0, 10.0).unwrap()).unwrap();
/// let trace = orbit::iterate(&pair, 0.0, 3.0, &orbit::ConvergencePolicy::default()).unwrap();
/// assert!(trace.converged());
/// // the gap settles near 1, not near 0
/// assert!((trace.final_gap() - 1.0).abs() < 1e-9);
/// ```
pub fn iterate(pair: &MeanPair, x: f64, y: f64, policy: &ConvergencePolicy) -> Result<OrbitTrace> {
    policy.validate()?;
    if !pair.domain().contains(x) || !pair.domain().contains(y) {
        return Err(Error::OutsideDomain {
            x,
            y,
            domain: pair.domain(),
        });
    }
    let mut pairs = vec![(x, y)];
    let mut cur = (x, y);
    let mut steps = 0usize;
    let mut converged = false;

    while steps < policy.max_steps {
        let next = pair.step(cur.0, cur.1).map_err(|e| Error::OrbitStep {
            step: steps + 1,
            source: Box::new(e),
        })?;
        if next == cur {
            // exact fixed point; recording it again would add nothing
            converged = true;
            break;
        }
        let (lo, hi) = (cur.0.min(cur.1), cur.0.max(cur.1));
        for (name, v) in [(pair.m().name(), next.0), (pair.n().name(), next.1)] {
            if !(lo <= v && v <= hi) {
                return Err(Error::OrbitStep {
                    step: steps + 1,
                    source: Box::new(Error::MeanBounds {
                        name: name.to_string(),
                        x: cur.0,
                        y: cur.1,
                        value: v,
                        lo,
                        hi,
                    }),
                });
            }
        }
        steps += 1;
        if pairs.len() < policy.store_cap {
            pairs.push(next);
        }
        let movement = (next.0 - cur.0).abs().max((next.1 - cur.1).abs());
        let gap_change = ((next.0 - next.1).abs() - (cur.0 - cur.1).abs()).abs();
        cur = next;
        if movement < policy.gap_tol && gap_change < policy.gap_tol {
            converged = true;
            break;
        }
    }

    Ok(OrbitTrace {
        pairs,
        final_pair: cur,
        steps,
        converged,
        final_gap: (cur.0 - cur.1).abs(),
    })
}

/// The two envelope limits of an orbit: `lo` estimates lim min(x_n, y_n),
/// `up` estimates lim max(x_n, y_n). Monotonicity makes the estimates
/// one-sided: `lo` from below, `up` from above.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LowerUpper {
    pub lo: f64,
    pub up: f64,
    /// False when the orbit hit max_steps first; the values are then the
    /// best available truncations, flagged approximate.
    pub converged: bool,
}

/// Estimate the lower and upper envelope limits from (x, y). These are the
/// extreme invariant means of the pair evaluated at one point.
///
/// A symmetric pair without the comparability flag is iterated in its
/// meet/join form: the unordered iterate pair is the same either way (a
/// symmetric mean ignores argument order), but the sorted orbit keeps each
/// coordinate monotone, so the stopping rule fires at the same step as for
/// the meet/join pair and the two computations agree bit for bit — not just
/// within tolerance. Raw traces from [`iterate`] are unaffected.
pub fn lower_upper(
    pair: &MeanPair,
    x: f64,
    y: f64,
    policy: &ConvergencePolicy,
) -> Result<LowerUpper> {
    let trace = if pair.symmetric() && !pair.comparable_le() {
        iterate(&meet_join(pair), x, y, policy)?
    } else {
        iterate(pair, x, y, policy)?
    };
    let (lo, up) = trace.final_envelope();
    Ok(LowerUpper {
        lo,
        up,
        converged: trace.converged(),
    })
}

/// Flatten a trace into the interleaved sequence x_0, y_0, x_1, y_1, ...
/// (so the 1-based even positions are exactly the y-orbit). Length is twice
/// the number of stored pairs.
///
/// # Example
/// ```
/// use meanlab::orbit::interleave_pairs;
/// assert_eq!(interleave_pairs(&[(1.0, 2.0), (1.5, 1.41)]), vec![1.0, 2.0, 1.5, 1.41]);
/// assert_eq!(interleave_pairs(&[(7.0, 7.0)]), vec![7.0, 7.0]);
/// ```
pub fn interleave_pairs(pairs: &[(f64, f64)]) -> Vec<f64> {
    let mut out = Vec::with_capacity(pairs.len() * 2);
    for &(a, b) in pairs {
        out.push(a);
        out.push(b);
    }
    out
}

/// Interleave a trace's stored pairs.
pub fn interleave(trace: &OrbitTrace) -> Vec<f64> {
    interleave_pairs(trace.pairs())
}
