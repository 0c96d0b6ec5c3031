//! Tail functionals on bounded sequences and the invariant means they induce.
//!
//! A *tail functional* assigns a number to a bounded sequence while ignoring
//! any finite prefix: liminf, limsup, and a weighted family blending the two.
//! Applied to the interleaved orbit x_0, y_0, x_1, y_1, ... of a mean pair,
//! each one yields a function of the starting point that is again a mean and
//! is invariant under the pair — liminf gives the lower envelope limit,
//! limsup the upper, and the weighted family sweeps everything between.
//!
//! The weighted functional combines three tail quantities:
//!
//! ```text
//! value = liminf + w(t) * (limsup - liminf)
//! ```
//!
//! where `w` maps [0, 1] into [0, 1] and `t` is the liminf of the entries at
//! *even 1-based positions* (the second, fourth, ... entries — the y-orbit of
//! an interleaved trace), affinely normalized into [0, 1]. The normalization
//! range matters and is documented per entry point: [`TailFunctional::apply`]
//! uses the sequence's own tail range (making the functional invariant under
//! shifts and exactly `w(x)` on the 4-periodic probes `0, x, 0, 1, ...`),
//! while [`orbit_mean`] uses the envelope `[min(x, y), max(x, y)]` of the
//! starting point, i.e. the whole orbit is rescaled onto [0, 1] before the
//! functional is applied and the result is mapped back.
//!
//! Finite data can only estimate tail quantities. [`tail_bounds`] reports
//! window minima/maxima and flags the estimate `exact` when the window is
//! bit-for-bit periodic; [`EventuallyPeriodic`] sequences make every tail
//! quantity exactly computable, which is what the law checks
//! ([`check_tail_laws`]) rely on: shift-by-two invariance and the
//! liminf/limsup sandwich are verified with no tolerance at all.

use crate::error::{Error, Result};
use crate::expr::WeightFn;
use crate::mean::{Mean, MeanPair, PropertySet};
use crate::orbit::{self, ConvergencePolicy};
use serde::Serialize;
use std::fmt;

/// Default tail-window length for a stored sequence: the trailing quarter,
/// at least 16 entries, never more than the sequence itself.
pub fn default_window(len: usize) -> usize {
    (len / 4).max(16).min(len)
}

/// Window estimates of the tail infimum and supremum of a finite sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailEstimate {
    /// Minimum over the window; equals the true tail liminf when `exact`.
    pub liminf_est: f64,
    /// Maximum over the window; equals the true tail limsup when `exact`.
    pub limsup_est: f64,
    /// Number of trailing entries the estimate was computed from.
    pub window: usize,
    /// True when the window repeats bit-for-bit with some period at most
    /// half the window, so the window statistics are the true tail bounds.
    pub exact: bool,
}

/// Estimate tail bounds of `seq` from its last `window` entries.
///
/// The estimates are the window minimum and maximum. If the window is
/// periodic with some period p <= window/2 (checked by exact bit comparison,
/// smallest p reported via the `exact` flag), the window provably contains a
/// full cycle and the estimates are the exact tail inf/sup of any infinite
/// continuation with that period.
///
/// # Example
/// ```
/// use meanlab::limitlike::tail_bounds;
/// let seq: Vec<f64> = [0.0, 0.5, 0.0, 1.0].repeat(8);
/// let est = tail_bounds(&seq, 16).unwrap();
/// assert_eq!((est.liminf_est, est.limsup_est), (0.0, 1.0));
/// assert!(est.exact);
/// ```
pub fn tail_bounds(seq: &[f64], window: usize) -> Result<TailEstimate> {
    if window == 0 || window > seq.len() {
        return Err(Error::BadWindow {
            window,
            len: seq.len(),
        });
    }
    let tail = &seq[seq.len() - window..];
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in tail {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let exact = (1..=window / 2).any(|p| (p..window).all(|i| tail[i] == tail[i - p]));
    Ok(TailEstimate {
        liminf_est: lo,
        limsup_est: hi,
        window,
        exact,
    })
}

/// A tail functional: a shift-insensitive way to turn a bounded sequence
/// into a number between its tail liminf and limsup.
#[derive(Debug, Clone)]
pub enum TailFunctional {
    /// Tail infimum — the smallest functional of the family.
    Liminf,
    /// Tail supremum — the largest.
    Limsup,
    /// `liminf + w(t)·(limsup − liminf)` with `t` the normalized liminf of
    /// the even-position entries. See the module docs for the exact
    /// normalization rules.
    Weighted(WeightFn),
}

impl fmt::Display for TailFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TailFunctional::Liminf => write!(f, "liminf"),
            TailFunctional::Limsup => write!(f, "limsup"),
            TailFunctional::Weighted(w) => write!(f, "w:{}", w.source()),
        }
    }
}

/// Combine tail bounds and a weight value, staying inside [lo, hi] exactly.
/// The affine form lo·(1−w) + hi·w hits both endpoints without rounding
/// residue; the clamp absorbs interior rounding.
fn combine(lo: f64, hi: f64, w: f64) -> f64 {
    (lo * (1.0 - w) + hi * w).clamp(lo, hi)
}

/// Normalize `v` from [lo, hi] onto [0, 1], clamped against rounding spill.
fn normalize(v: f64, lo: f64, hi: f64) -> f64 {
    if hi > lo {
        ((v - lo) / (hi - lo)).clamp(0.0, 1.0)
    } else {
        0.0
    }
}

impl TailFunctional {
    /// Apply to a finite sequence, reading tail statistics from the last
    /// `window` entries. The weighted variant normalizes its weight argument
    /// by the tail range itself, so the result is unchanged by dropping any
    /// prefix that the window never sees.
    pub fn apply(&self, seq: &[f64], window: usize) -> Result<f64> {
        let est = tail_bounds(seq, window)?;
        self.apply_estimated(seq, est, (est.liminf_est, est.limsup_est))
    }

    /// Apply with the weight argument normalized by an explicit `scale`
    /// range instead of the tail range. [`orbit_mean`] uses this with the
    /// starting envelope [min(x, y), max(x, y)], which is how a functional
    /// defined on [0, 1]-valued sequences is extended to arbitrary domains:
    /// rescale the orbit onto [0, 1], apply, map back.
    pub fn apply_scaled(&self, seq: &[f64], window: usize, scale: (f64, f64)) -> Result<f64> {
        let est = tail_bounds(seq, window)?;
        self.apply_estimated(seq, est, scale)
    }

    fn apply_estimated(&self, seq: &[f64], est: TailEstimate, scale: (f64, f64)) -> Result<f64> {
        match self {
            TailFunctional::Liminf => Ok(est.liminf_est),
            TailFunctional::Limsup => Ok(est.limsup_est),
            TailFunctional::Weighted(w) => {
                // Constant tail: every functional collapses to the limit.
                if est.liminf_est == est.limsup_est {
                    return Ok(est.liminf_est);
                }
                let start = seq.len() - est.window;
                let mut even_lo = f64::INFINITY;
                let mut seen = false;
                for i in (start..seq.len()).filter(|i| i % 2 == 1) {
                    even_lo = even_lo.min(seq[i]);
                    seen = true;
                }
                if !seen {
                    return Err(Error::SequenceTooShort { len: seq.len() });
                }
                let wv = w.eval(normalize(even_lo, scale.0, scale.1))?;
                Ok(combine(est.liminf_est, est.limsup_est, wv))
            }
        }
    }

    /// Apply exactly to an eventually periodic sequence — every tail
    /// quantity is computed from the cycle structure, with no window and no
    /// tolerance. This is the reference semantics the finite-window path
    /// approximates.
    pub fn apply_exact(&self, seq: &EventuallyPeriodic) -> Result<f64> {
        let lo = seq.liminf();
        let hi = seq.limsup();
        match self {
            TailFunctional::Liminf => Ok(lo),
            TailFunctional::Limsup => Ok(hi),
            TailFunctional::Weighted(w) => {
                if lo == hi {
                    return Ok(lo);
                }
                let wv = w.eval(normalize(seq.even_position_liminf(), lo, hi))?;
                Ok(combine(lo, hi, wv))
            }
        }
    }
}

/// Build the mean that evaluates a tail functional on the interleaved orbit
/// of `pair` started at the evaluation point.
///
/// Liminf and limsup give the extreme invariant means of the pair (the
/// lower and upper envelope limits); weighted functionals interpolate. The
/// weight argument is normalized by the starting envelope
/// [min(x, y), max(x, y)] — see the module docs.
///
/// The returned mean stores the whole orbit up to `policy.max_steps` pairs
/// (overriding `store_cap`) so the tail window is genuine; budget memory
/// accordingly for very large step counts. Evaluation fails with
/// [`Error::NoConvergence`] when the orbit does not stabilize within
/// `max_steps`, rather than reporting a tail of something still moving.
///
/// Window estimates of a monotonically converging tail are only as good as
/// the window's *oldest* entry, so after the stopping rule fires the orbit
/// is extended by one window length: the default window then contains only
/// post-stabilization values and the tail estimates are accurate to a small
/// multiple of `gap_tol` instead of degrading with orbit length.
///
/// # Example
/// ```
/// use meanlab::limitlike::{orbit_mean, TailFunctional};
/// use meanlab::orbit::ConvergencePolicy;
/// use meanlab::{example_pair, Interval};
/// let pair = example_pair(Interval::new(0.0, 10.0).unwrap()).unwrap();
/// let lo = orbit_mean(&pair, TailFunctional::Liminf, ConvergencePolicy::default()).unwrap();
/// assert!((lo.eval(0.0, 3.0).unwrap() - 1.0).abs() < 1e-9);
/// ```
pub fn orbit_mean(
    pair: &MeanPair,
    functional: TailFunctional,
    policy: ConvergencePolicy,
) -> Result<Mean> {
    policy.validate()?;
    let name = format!(
        "bo:{}({}, {})",
        functional,
        pair.m().name(),
        pair.n().name()
    );
    let properties = PropertySet {
        symmetric: pair.symmetric(),
        ..PropertySet::default()
    };
    let pair = pair.clone();
    Ok(Mean::from_fn(
        name,
        pair.domain(),
        properties,
        move |x, y| {
            let out = orbit_functional_value(&pair, &functional, &policy, None, x, y)?;
            if !out.converged {
                return Err(Error::NoConvergence {
                    max_steps: policy.max_steps,
                    final_gap: out.final_gap,
                });
            }
            Ok(out.value)
        },
    ))
}

/// Outcome of [`orbit_functional_value`]: the windowed tail value plus the
/// stopping diagnostics needed to judge it.
#[derive(Debug, Clone, Copy)]
pub struct FunctionalOutcome {
    pub value: f64,
    /// Whether the orbit met the stopping rule within the step budget.
    pub converged: bool,
    /// Gap |x_n - y_n| where iteration stopped (before any tail extension).
    pub final_gap: f64,
}

/// Evaluate a tail functional on the interleaved orbit of `pair` started at
/// `(x, y)`, returning the value together with whether the orbit stabilized.
///
/// This is the engine behind [`orbit_mean`] for callers that want the honest
/// windowed estimate even when the orbit ran out of steps (`converged` is
/// `false` in that case) or that need an explicit tail window: `None` uses
/// the default quarter-of-the-trace window, `Some(w)` uses exactly the last
/// `w` interleaved entries.
///
/// Converged orbits are extended past the stopping point so the window sits
/// entirely in post-stabilization values (see [`orbit_mean`]); non-converged
/// orbits are evaluated as recorded.
pub fn orbit_functional_value(
    pair: &MeanPair,
    functional: &TailFunctional,
    policy: &ConvergencePolicy,
    window: Option<usize>,
    x: f64,
    y: f64,
) -> Result<FunctionalOutcome> {
    policy.validate()?;
    let policy = ConvergencePolicy {
        store_cap: policy.max_steps.max(policy.store_cap),
        ..*policy
    };
    let trace = orbit::iterate(pair, x, y, &policy)?;
    let mut pairs = trace.pairs().to_vec();
    if trace.converged() {
        // Extend past the stopping point until the tail window fits inside
        // the extension. For the default quarter-length window, solving
        // window(2·(base + ext)) <= 2·ext gives ext >= base / 3 (with the
        // 16-entry floor -> ext >= 8); for an explicit window of w entries,
        // ext = w/2 + 1 suffices.
        let base = pairs.len();
        let extension = match window {
            None => ((base + 2) / 3).max(9),
            Some(w) => (w / 2 + 1).max(9),
        };
        let (mut cx, mut cy) = trace.final_pair();
        for i in 0..extension {
            let (nx, ny) = pair.step(cx, cy).map_err(|e| Error::OrbitStep {
                step: trace.steps() + i + 1,
                source: Box::new(e),
            })?;
            pairs.push((nx, ny));
            (cx, cy) = (nx, ny);
        }
    }
    let seq = orbit::interleave_pairs(&pairs);
    let window = window.unwrap_or_else(|| default_window(seq.len()));
    let value = functional.apply_scaled(&seq, window, (x.min(y), x.max(y)))?;
    Ok(FunctionalOutcome {
        value,
        converged: trace.converged(),
        final_gap: trace.final_gap(),
    })
}

/// An infinite sequence given as a finite prefix followed by a repeating
/// cycle. Tail quantities (liminf, limsup, and the liminf over even
/// positions) are exactly computable, which is what makes tolerance-free
/// law checking possible.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EventuallyPeriodic {
    prefix: Vec<f64>,
    cycle: Vec<f64>,
}

impl EventuallyPeriodic {
    /// A sequence running through `prefix` once, then `cycle` forever.
    pub fn new(prefix: Vec<f64>, cycle: Vec<f64>) -> Result<Self> {
        if cycle.is_empty() || !cycle.iter().chain(&prefix).all(|v| v.is_finite()) {
            return Err(Error::BadCycle);
        }
        Ok(EventuallyPeriodic { prefix, cycle })
    }

    /// A purely periodic sequence.
    pub fn periodic(cycle: Vec<f64>) -> Result<Self> {
        Self::new(Vec::new(), cycle)
    }

    /// The constant sequence v, v, v, ...
    pub fn constant(v: f64) -> Result<Self> {
        Self::periodic(vec![v])
    }

    pub fn prefix(&self) -> &[f64] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[f64] {
        &self.cycle
    }

    /// Entry at 0-based index `i`.
    pub fn value_at(&self, i: usize) -> f64 {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// The first `len` entries as a concrete vector.
    pub fn realize(&self, len: usize) -> Vec<f64> {
        (0..len).map(|i| self.value_at(i)).collect()
    }

    /// The sequence with its first `k` entries dropped.
    pub fn shifted(&self, k: usize) -> EventuallyPeriodic {
        if k <= self.prefix.len() {
            EventuallyPeriodic {
                prefix: self.prefix[k..].to_vec(),
                cycle: self.cycle.clone(),
            }
        } else {
            let rot = (k - self.prefix.len()) % self.cycle.len();
            let mut cycle = self.cycle[rot..].to_vec();
            cycle.extend_from_slice(&self.cycle[..rot]);
            EventuallyPeriodic {
                prefix: Vec::new(),
                cycle,
            }
        }
    }

    /// Exact tail infimum: the cycle minimum.
    pub fn liminf(&self) -> f64 {
        self.cycle.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Exact tail supremum: the cycle maximum.
    pub fn limsup(&self) -> f64 {
        self.cycle.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Exact liminf of the entries at even 1-based positions (0-based odd
    /// indices). Stepping an odd index by 2 walks the cycle positions hit
    /// infinitely often — all of them when the cycle length is odd, one
    /// parity class when it is even — so sampling cycle-length + 1
    /// consecutive odd indices past the prefix covers the whole set.
    pub fn even_position_liminf(&self) -> f64 {
        let first_odd = self.prefix.len() + (self.prefix.len() + 1) % 2;
        (0..=self.cycle.len())
            .map(|j| self.value_at(first_odd + 2 * j))
            .fold(f64::INFINITY, f64::min)
    }
}

/// The 4-periodic probe sequence 0, x, 0, 1, 0, x, 0, 1, ...
///
/// For x in [0, 1] its tail range is [0, 1] and the even positions hold
/// x, 1, x, 1, ..., so the weighted functional returns exactly w(x): the
/// probe reads the weight function off pointwise, which is why distinct
/// weights are distinguishable on this family.
pub fn probe_sequence(x: f64) -> Result<EventuallyPeriodic> {
    EventuallyPeriodic::periodic(vec![0.0, x, 0.0, 1.0])
}

/// One failed law instance on one test sequence.
#[derive(Debug, Clone, Serialize)]
pub struct LawViolation {
    /// Index into the checked family.
    pub sequence_index: usize,
    /// Which law failed: "shift_by_two" or "sandwich".
    pub law: &'static str,
    pub detail: String,
}

/// Outcome of checking the two tail-functional laws over a family of
/// eventually periodic sequences. Both laws are checked exactly.
#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub functional: String,
    pub sequences_checked: usize,
    pub violations: Vec<LawViolation>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verify, with no tolerance, that `functional` (i) is unchanged by
/// dropping the first two entries and (ii) lands between tail liminf and
/// limsup, on every sequence of `family`.
pub fn check_tail_laws(
    functional: &TailFunctional,
    family: &[EventuallyPeriodic],
) -> Result<LawReport> {
    let mut violations = Vec::new();
    for (i, seq) in family.iter().enumerate() {
        let value = functional.apply_exact(seq)?;
        let shifted = functional.apply_exact(&seq.shifted(2))?;
        if value != shifted {
            violations.push(LawViolation {
                sequence_index: i,
                law: "shift_by_two",
                detail: format!("value {value} changed to {shifted} after shifting by two"),
            });
        }
        let (lo, hi) = (seq.liminf(), seq.limsup());
        if !(lo <= value && value <= hi) {
            violations.push(LawViolation {
                sequence_index: i,
                law: "sandwich",
                detail: format!("value {value} outside [{lo}, {hi}]"),
            });
        }
    }
    Ok(LawReport {
        functional: functional.to_string(),
        sequences_checked: family.len(),
        violations,
    })
}

/// Twenty eventually periodic sequences exercising the law checks: the
/// 4-periodic probe family over a spread of x values, constants, prefixes
/// that differ from the tail (including out-of-range spikes), odd and even
/// cycle lengths, negative values, and a convergent tail.
pub fn standard_test_family() -> Vec<EventuallyPeriodic> {
    let mut family = Vec::new();
    for x in [0.0, 0.1, 0.25, 0.3, 0.5, 0.7, 0.9, 1.0] {
        family.push(probe_sequence(x).unwrap());
    }
    let build = |prefix: &[f64], cycle: &[f64]| {
        EventuallyPeriodic::new(prefix.to_vec(), cycle.to_vec()).unwrap()
    };
    family.push(EventuallyPeriodic::constant(5.0).unwrap());
    family.push(build(&[9.0, -3.0], &[0.25]));
    family.push(build(&[], &[0.0, 1.0]));
    family.push(build(&[1.0], &[0.3, 0.7]));
    family.push(build(&[], &[0.0, 0.5, 1.0]));
    family.push(build(&[0.05], &[0.2, 0.9, 0.4]));
    family.push(build(&[], &[0.0, 0.2, 0.4, 0.6, 0.8]));
    family.push(build(&[], &[0.0, 1.0, 0.5, 1.0, 0.0, 0.25]));
    family.push(build(&[], &[1.0, 0.0, 1.0, 0.5]));
    family.push(build(&[], &[-1.0, 1.0]));
    family.push(build(&[], &[10.0, 0.0, 10.0, 20.0]));
    family.push(build(&[0.0, 0.0, 0.0], &[0.25]));
    family
}
