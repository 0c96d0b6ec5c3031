//! Staged iteration beyond the first limit: limit stages alternating with
//! single successor steps.
//!
//! Plain orbit iteration can stall with the envelope gap pinned at a
//! positive value — the example pair freezes at gap 1 from any wide start.
//! The staged engine treats each such stabilized orbit as one *limit stage*,
//! records the resulting pair, applies exactly one further (M, N) step, and
//! iterates again, until the pair collapses to the diagonal (or a budget is
//! exhausted). The diagonal value is the distinguished invariant mean of the
//! pair — [`transfinite_mean`] — and the pairs recorded after k limit stages
//! define the staged means of [`stage_mean`], whose first stage recovers the
//! lower/upper envelope limits.
//!
//! Truncation meets discontinuity at the successor step. A limit stage stops
//! with the pair a hair *outside* the true limit configuration (the envelopes
//! converge monotonically from outside), and for a discontinuous pair that
//! hair can select the wrong branch, freezing the successor in place. When a
//! successor step moves by less than `gap_tol`, the engine therefore retries
//! it from the pair nudged inward by `2·gap_tol` (clamped at the midpoint):
//! crossing to the correct side of the limit configuration while staying
//! within the stage's own uncertainty. If even the nudged step cannot move,
//! the pair is genuinely frozen and the run reports [`Termination::Stalled`].

use crate::error::{Error, Result};
use crate::mean::{meet_join, Mean, MeanPair, PropertySet};
use crate::orbit::{self, ConvergencePolicy};
use serde::Serialize;

/// Budget for the staged engine: each limit stage runs one orbit under
/// `inner`, and at most `max_limit_stages` stages are attempted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StagePolicy {
    pub inner: ConvergencePolicy,
    pub max_limit_stages: usize,
}

impl Default for StagePolicy {
    fn default() -> Self {
        StagePolicy {
            inner: ConvergencePolicy::default(),
            max_limit_stages: 64,
        }
    }
}

impl StagePolicy {
    pub fn validate(&self) -> Result<()> {
        self.inner.validate()?;
        if self.max_limit_stages == 0 {
            return Err(Error::InvalidPolicy("max_limit_stages must be >= 1".into()));
        }
        Ok(())
    }
}

/// How a staged run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// The pair collapsed to the diagonal within tolerance — the normal end.
    Diagonal,
    /// A successor step refused to move (even after the inward retry) while
    /// the gap stayed open; the configuration is frozen off the diagonal and
    /// the reported value is approximate.
    Stalled,
    /// The stage budget ran out with the gap still open; approximate.
    StageBudgetExhausted,
}

/// Full record of one staged run.
#[derive(Debug, Clone, Serialize)]
pub struct TransfiniteReport {
    /// Midpoint of the final pair — the staged invariant-mean value.
    pub tr_value: f64,
    /// (min, max) of the pair at the end of each limit stage. The first
    /// entry approximates the lower/upper envelope limits of the start.
    pub stage_pairs: Vec<(f64, f64)>,
    /// (min, max) after each successor step taken between stages.
    pub successor_pairs: Vec<(f64, f64)>,
    /// The configuration the run ended in.
    pub final_pair: (f64, f64),
    pub limit_stages_used: usize,
    /// True when the run ended on the diagonal (gap below tolerance).
    pub terminated_diagonal: bool,
    pub termination: Termination,
    /// True when every limit-stage orbit satisfied its own stopping rule
    /// within the step budget.
    pub inner_converged: bool,
}

impl TransfiniteReport {
    /// True unless the run both reached the diagonal and had every inner
    /// orbit converge — approximate values should be labeled as such.
    pub fn approximate(&self) -> bool {
        !(self.terminated_diagonal && self.inner_converged)
    }
}

/// Resolve the pair the staged engine actually iterates: comparable pairs
/// are used as-is; symmetric pairs are replaced by their pointwise min/max
/// pair, which has the same orbits as unordered pairs and is comparable by
/// construction. Anything else is rejected.
fn applicable_pair(pair: &MeanPair) -> Result<MeanPair> {
    if pair.comparable_le() {
        Ok(pair.clone())
    } else if pair.symmetric() {
        Ok(meet_join(pair))
    } else {
        Err(Error::PairNotApplicable)
    }
}

/// One successor step from the recorded stage pair (a, b), with the inward
/// retry described in the module docs. Returns the stepped pair and whether
/// it is genuinely frozen (moved less than `tol` with the gap still open).
fn successor_step(pair: &MeanPair, a: f64, b: f64, tol: f64) -> Result<((f64, f64), bool)> {
    let step_checked = |x: f64, y: f64| -> Result<(f64, f64)> {
        let (sx, sy) = pair.step(x, y)?;
        for (value, name) in [(sx, pair.m().name()), (sy, pair.n().name())] {
            if !(a <= value && value <= b) {
                return Err(Error::MeanBounds {
                    name: name.to_string(),
                    x,
                    y,
                    value,
                    lo: a,
                    hi: b,
                });
            }
        }
        Ok((sx, sy))
    };
    let (rx, ry) = step_checked(a, b)?;
    let moved = (rx - a).abs().max((ry - b).abs());
    if moved >= tol || (rx - ry).abs() < tol {
        return Ok(((rx, ry), false));
    }
    let mid = 0.5 * (a + b);
    let (na, nb) = ((a + 2.0 * tol).min(mid), (b - 2.0 * tol).max(mid));
    let (rx, ry) = step_checked(na, nb)?;
    let moved = (rx - na).abs().max((ry - nb).abs());
    Ok(((rx, ry), moved < tol && (rx - ry).abs() >= tol))
}

/// The staged loop, shared by every public entry point. `stage_cap` bounds
/// how many limit stages run.
fn drive(
    working: &MeanPair,
    x: f64,
    y: f64,
    inner: &ConvergencePolicy,
    stage_cap: usize,
) -> Result<TransfiniteReport> {
    let tol = inner.gap_tol;
    let mut stage_pairs = Vec::new();
    let mut successor_pairs = Vec::new();
    let mut inner_converged = true;
    let (mut cx, mut cy) = (x, y);
    let (termination, final_pair) = loop {
        let trace = orbit::iterate(working, cx, cy, inner)?;
        inner_converged &= trace.converged();
        let (a, b) = trace.final_envelope();
        stage_pairs.push((a, b));
        if b - a < tol {
            break (Termination::Diagonal, (a, b));
        }
        if stage_pairs.len() >= stage_cap {
            break (Termination::StageBudgetExhausted, (a, b));
        }
        let ((sx, sy), frozen) = successor_step(working, a, b, tol)?;
        let (sa, sb) = (sx.min(sy), sx.max(sy));
        successor_pairs.push((sa, sb));
        if sb - sa < tol {
            break (Termination::Diagonal, (sa, sb));
        }
        if frozen {
            break (Termination::Stalled, (sa, sb));
        }
        (cx, cy) = (sa, sb);
    };
    Ok(TransfiniteReport {
        tr_value: 0.5 * (final_pair.0 + final_pair.1),
        stage_pairs: stage_pairs.clone(),
        successor_pairs,
        final_pair,
        limit_stages_used: stage_pairs.len(),
        terminated_diagonal: termination == Termination::Diagonal,
        termination,
        inner_converged,
    })
}

/// Run the staged iteration from (x, y) to its end.
///
/// Requires the pair to be flagged comparable or to be symmetric (see
/// [`applicable_pair`]'s rules); rejects others with
/// [`Error::PairNotApplicable`]. Budget exhaustion and frozen configurations
/// are reported through the `termination` field, not as errors — the value
/// is still returned, flagged approximate.
///
/// # Example
/// ```
/// use meanlab::transfinite::{transfinite_iterate, StagePolicy};
/// use meanlab::{example_pair, Interval};
/// let pair = example_pair(Interval::new(0.0, 10.0).unwrap()).unwrap();
/// let report = transfinite_iterate(&pair, 0.0, 3.0, &StagePolicy::default()).unwrap();
/// assert_eq!(report.limit_stages_used, 1);
/// assert!(report.terminated_diagonal);
/// assert!((report.tr_value - 1.5).abs() < 1e-9);
/// ```
pub fn transfinite_iterate(
    pair: &MeanPair,
    x: f64,
    y: f64,
    policy: &StagePolicy,
) -> Result<TransfiniteReport> {
    policy.validate()?;
    let working = applicable_pair(pair)?;
    drive(&working, x, y, &policy.inner, policy.max_limit_stages)
}

/// Which component of the staged pair a [`stage_mean`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StageSide {
    Lower,
    Upper,
}

/// The mean that maps (x, y) to one component of the pair after `stage`
/// limit stages (stage 1 gives the lower/upper envelope limits). Runs that
/// reach the diagonal earlier stay there, so later stages are constant in
/// the stage index. The requested stage overrides the policy's stage budget.
pub fn stage_mean(
    pair: &MeanPair,
    stage: usize,
    side: StageSide,
    policy: &StagePolicy,
) -> Result<Mean> {
    if stage == 0 {
        return Err(Error::BadStage);
    }
    policy.validate()?;
    let working = applicable_pair(pair)?;
    let inner = policy.inner;
    let name = format!(
        "stage:{}:{}({}, {})",
        stage,
        match side {
            StageSide::Lower => "lower",
            StageSide::Upper => "upper",
        },
        pair.m().name(),
        pair.n().name()
    );
    let properties = PropertySet {
        symmetric: pair.symmetric(),
        ..PropertySet::default()
    };
    Ok(Mean::from_fn(
        name,
        pair.domain(),
        properties,
        move |x, y| {
            let report = drive(&working, x, y, &inner, stage)?;
            Ok(match side {
                StageSide::Lower => report.final_pair.0,
                StageSide::Upper => report.final_pair.1,
            })
        },
    ))
}

/// Run the staged iteration from (x, y) with the stage budget overridden to
/// `stage`, returning the full report. This is [`stage_mean`]'s engine,
/// exposed for callers that need the termination diagnostics together with
/// the stage pair.
pub fn stage_report(
    pair: &MeanPair,
    stage: usize,
    policy: &StagePolicy,
    x: f64,
    y: f64,
) -> Result<TransfiniteReport> {
    if stage == 0 {
        return Err(Error::BadStage);
    }
    policy.validate()?;
    let working = applicable_pair(pair)?;
    drive(&working, x, y, &policy.inner, stage)
}

/// The staged invariant mean as a [`Mean`]: the diagonal value the run ends
/// in. Points whose runs end off the diagonal (stalled or out of budget)
/// evaluate to [`Error::NoConvergence`] rather than silently returning an
/// approximate value; use [`transfinite_iterate`] to inspect those runs.
pub fn transfinite_mean(pair: &MeanPair, policy: &StagePolicy) -> Result<Mean> {
    policy.validate()?;
    let working = applicable_pair(pair)?;
    let policy = *policy;
    let name = format!("tr({}, {})", pair.m().name(), pair.n().name());
    let properties = PropertySet {
        symmetric: pair.symmetric(),
        ..PropertySet::default()
    };
    Ok(Mean::from_fn(
        name,
        pair.domain(),
        properties,
        move |x, y| {
            let report = drive(&working, x, y, &policy.inner, policy.max_limit_stages)?;
            if report.approximate() {
                return Err(Error::NoConvergence {
                    max_steps: policy.max_limit_stages,
                    final_gap: report.final_pair.1 - report.final_pair.0,
                });
            }
            Ok(report.tr_value)
        },
    ))
}

/// Default multiplier on the grid spacing for flagging a jump in the
/// continuity probe: adjacent-node differences above `factor · h` are
/// treated as discontinuity evidence.
pub const DEFAULT_JUMP_FACTOR: f64 = 10.0;

/// Grid scan of the staged mean for discontinuity evidence.
#[derive(Debug, Clone, Serialize)]
pub struct ContinuityProbe {
    pub axis_points: usize,
    /// Grid spacing h.
    pub spacing: f64,
    /// Largest |difference| between horizontally or vertically adjacent
    /// nodes.
    pub max_jump: f64,
    /// Jumps above this flag a discontinuity at this resolution.
    pub threshold: f64,
    /// The adjacent node pair realizing `max_jump` (first in scan order).
    pub witness: ((f64, f64), (f64, f64)),
    pub jump_detected: bool,
    /// Nodes whose staged runs ended off the diagonal; their values are
    /// approximate and so, then, is the probe.
    pub approximate_nodes: usize,
}

/// Scan the staged mean over an `axis_points`-per-side uniform lattice and
/// compare adjacent nodes, flagging differences above `jump_factor · h`.
///
/// A flagged jump is heuristic evidence that the pair admits no continuous
/// invariant mean; an unflagged scan only says no discontinuity was visible
/// at this resolution — it proves nothing.
pub fn continuity_probe_with(
    pair: &MeanPair,
    axis_points: usize,
    jump_factor: f64,
    policy: &StagePolicy,
) -> Result<ContinuityProbe> {
    if axis_points < 2 {
        return Err(Error::BadGrid(format!(
            "continuity probe needs at least 2 nodes per axis, got {axis_points}"
        )));
    }
    if !(jump_factor > 0.0) || !jump_factor.is_finite() {
        return Err(Error::InvalidPolicy(format!(
            "jump factor must be positive and finite, got {jump_factor}"
        )));
    }
    policy.validate()?;
    let working = applicable_pair(pair)?;
    let pts = pair.domain().uniform_points(axis_points);
    let h = pts[1] - pts[0];
    let mut values = vec![0.0; axis_points * axis_points];
    let mut approximate_nodes = 0;
    for (i, &x) in pts.iter().enumerate() {
        for (j, &y) in pts.iter().enumerate() {
            let report = drive(&working, x, y, &policy.inner, policy.max_limit_stages)?;
            if report.approximate() {
                approximate_nodes += 1;
            }
            values[i * axis_points + j] = report.tr_value;
        }
    }
    let mut max_jump = f64::NEG_INFINITY;
    let mut witness = ((pts[0], pts[0]), (pts[0], pts[1]));
    for i in 0..axis_points {
        for j in 0..axis_points {
            let v = values[i * axis_points + j];
            if j + 1 < axis_points {
                let jump = (v - values[i * axis_points + j + 1]).abs();
                if jump > max_jump {
                    max_jump = jump;
                    witness = ((pts[i], pts[j]), (pts[i], pts[j + 1]));
                }
            }
            if i + 1 < axis_points {
                let jump = (v - values[(i + 1) * axis_points + j]).abs();
                if jump > max_jump {
                    max_jump = jump;
                    witness = ((pts[i], pts[j]), (pts[i + 1], pts[j]));
                }
            }
        }
    }
    let threshold = jump_factor * h;
    Ok(ContinuityProbe {
        axis_points,
        spacing: h,
        max_jump,
        threshold,
        witness,
        jump_detected: max_jump > threshold,
        approximate_nodes,
    })
}

/// [`continuity_probe_with`] at the default jump factor.
pub fn continuity_probe(
    pair: &MeanPair,
    axis_points: usize,
    policy: &StagePolicy,
) -> Result<ContinuityProbe> {
    continuity_probe_with(pair, axis_points, DEFAULT_JUMP_FACTOR, policy)
}
