//! Two-variable means and pairs of them.
//!
//! A mean is a total map on a host interval squared whose value lies between
//! its arguments: min(x, y) <= M(x, y) <= max(x, y). Nothing here assumes
//! continuity — the whole point of the lab is that means may jump — so every
//! property beyond the bounds is carried as a declared flag and re-checkable
//! on sample grids (see [`crate::properties`]).
//!
//! Built-in evaluations clamp their raw f64 result into [min(x, y), max(x, y)].
//! For a true mean the clamp only absorbs final-rounding excursions (~1 ulp
//! from `sqrt`/`powf`), and it makes the bounds — and with them reflexivity
//! and orbit envelope monotonicity — hold exactly in floating point.

use crate::error::{Error, Result};
use crate::interval::Interval;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

type EvalFn = dyn Fn(f64, f64) -> Result<f64> + Send + Sync;

/// Declared structural properties of a mean. Declarations are claims made by
/// constructors (or recorded by grid validation), not proofs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PropertySet {
    /// M(x, y) = M(y, x).
    pub symmetric: bool,
    /// min < M(x, y) < max strictly whenever x != y.
    pub strict: bool,
    /// Member of a pair flagged with pointwise m <= n.
    pub comparable_le: bool,
    /// Member of a pair satisfying the strict gap contraction
    /// |M(x, y) - N(x, y)| < |x - y| off the diagonal.
    pub contractive_pair_member: bool,
}

/// A named two-variable mean on a host interval.
///
/// Evaluation is checked: arguments outside the domain are an error, and the
/// inner function may itself fail (expression means report division by zero
/// and similar with positions). `Mean` is cheaply cloneable.
#[derive(Clone)]
pub struct Mean {
    name: String,
    domain: Interval,
    properties: PropertySet,
    eval_fn: Arc<EvalFn>,
}

impl fmt::Debug for Mean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Mean")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("properties", &self.properties)
            .finish_non_exhaustive()
    }
}

impl Mean {
    /// Wrap an arbitrary evaluation function. The function is trusted to
    /// satisfy the declared properties; use [`crate::properties::check_properties`]
    /// or [`crate::expr::lift_to_mean`] when the claim needs evidence.
    pub fn from_fn<F>(
        name: impl Into<String>,
        domain: Interval,
        properties: PropertySet,
        f: F,
    ) -> Mean
    where
        F: Fn(f64, f64) -> Result<f64> + Send + Sync + 'static,
    {
        Mean {
            name: name.into(),
            domain,
            properties,
            eval_fn: Arc::new(f),
        }
    }

    /// Construct one of the classical means on `domain`.
    ///
    /// Preconditions: geometric, harmonic and power(p <= 0) need lo > 0;
    /// power(p) needs lo >= 0 for every p (fractional powers of negative
    /// arguments are undefined, and even powers of them break mean bounds).
    ///
    /// # Example
    /// ```
    /// use meanlab::{Interval, Mean, MeanKind};
    /// let d = Interval::new(0.0, 10.0).unwrap();
    /// let rms = Mean::builtin(MeanKind::Power(2.0), d).unwrap();
    /// assert_eq!(rms.eval(1.0, 7.0).unwrap(), 5.0);
    /// assert!(Mean::builtin(MeanKind::Geometric, d).is_err()); // lo = 0
    /// ```
    pub fn builtin(kind: MeanKind, domain: Interval) -> Result<Mean> {
        let incompatible = |reason: &str| Error::DomainIncompatible {
            mean: kind.to_string(),
            domain,
            reason: reason.into(),
        };
        match kind {
            MeanKind::Geometric | MeanKind::Harmonic if domain.lo() <= 0.0 => {
                return Err(incompatible("requires lo > 0"));
            }
            MeanKind::Power(p) if p <= 0.0 && domain.lo() <= 0.0 => {
                return Err(incompatible("requires lo > 0 for exponent <= 0"));
            }
            MeanKind::Power(p) if !p.is_finite() => {
                return Err(incompatible("exponent must be finite"));
            }
            MeanKind::Power(_) if domain.lo() < 0.0 => {
                return Err(incompatible("requires lo >= 0"));
            }
            _ => {}
        }
        let strict = !matches!(kind, MeanKind::Min | MeanKind::Max);
        let properties = PropertySet {
            symmetric: true,
            strict,
            ..PropertySet::default()
        };
        let f: Box<dyn Fn(f64, f64) -> f64 + Send + Sync> = match kind {
            MeanKind::Arithmetic => Box::new(|x, y| 0.5 * (x + y)),
            MeanKind::Geometric => Box::new(|x, y| (x * y).sqrt()),
            MeanKind::Harmonic => Box::new(|x, y| 2.0 * x * y / (x + y)),
            MeanKind::Power(p) if p == 0.0 => Box::new(|x, y| (x * y).sqrt()),
            MeanKind::Power(p) => {
                Box::new(move |x: f64, y: f64| (0.5 * (x.powf(p) + y.powf(p))).powf(1.0 / p))
            }
            MeanKind::Min => Box::new(f64::min),
            MeanKind::Max => Box::new(f64::max),
        };
        Ok(Mean::from_fn(
            kind.to_string(),
            domain,
            properties,
            move |x, y| Ok(clamp_between(f(x, y), x, y)),
        ))
    }

    /// Evaluate at (x, y). Errors if either argument leaves the host interval.
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        if !self.domain.contains(x) || !self.domain.contains(y) {
            return Err(Error::OutsideDomain {
                x,
                y,
                domain: self.domain,
            });
        }
        (self.eval_fn)(x, y)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn properties(&self) -> PropertySet {
        self.properties
    }
}

/// Built-in mean families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Harmonic,
    /// Power mean ((x^p + y^p)/2)^(1/p); p = 0 is the geometric mean.
    Power(f64),
    Min,
    Max,
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanKind::Arithmetic => write!(f, "arithmetic"),
            MeanKind::Geometric => write!(f, "geometric"),
            MeanKind::Harmonic => write!(f, "harmonic"),
            MeanKind::Power(p) => write!(f, "power({p})"),
            MeanKind::Min => write!(f, "min"),
            MeanKind::Max => write!(f, "max"),
        }
    }
}

fn clamp_between(v: f64, x: f64, y: f64) -> f64 {
    v.clamp(x.min(y), x.max(y))
}

/// An ordered pair of means sharing a host domain, iterated as
/// (x, y) -> (M(x, y), N(x, y)).
#[derive(Debug, Clone)]
pub struct MeanPair {
    m: Mean,
    n: Mean,
    domain: Interval,
    comparable_le: bool,
}

impl MeanPair {
    /// Pair two means over the same domain. The comparability flag starts
    /// unset; use [`MeanPair::flag_comparable_checked`] or [`meet_join`].
    pub fn new(m: Mean, n: Mean) -> Result<MeanPair> {
        if m.domain() != n.domain() {
            return Err(Error::DomainMismatch {
                left: m.domain(),
                right: n.domain(),
            });
        }
        let domain = m.domain();
        Ok(MeanPair {
            m,
            n,
            domain,
            comparable_le: false,
        })
    }

    /// Verify m <= n at every sampled point, then return the pair with the
    /// comparability flag set. Grid evidence only, not a proof.
    pub fn flag_comparable_checked(self, grid: &crate::grid::GridSpec) -> Result<MeanPair> {
        for (x, y) in grid.pairs(&self.domain)? {
            let a = self.m.eval(x, y)?;
            let b = self.n.eval(x, y)?;
            if a > b {
                return Err(Error::MeanBounds {
                    name: format!("comparability of ({}, {})", self.m.name(), self.n.name()),
                    x,
                    y,
                    value: a,
                    lo: f64::NEG_INFINITY,
                    hi: b,
                });
            }
        }
        Ok(MeanPair {
            comparable_le: true,
            ..self
        })
    }

    pub(crate) fn flag_comparable_unchecked(mut self) -> MeanPair {
        self.comparable_le = true;
        self
    }

    pub fn m(&self) -> &Mean {
        &self.m
    }

    pub fn n(&self) -> &Mean {
        &self.n
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn comparable_le(&self) -> bool {
        self.comparable_le
    }

    /// Both members declared symmetric.
    pub fn symmetric(&self) -> bool {
        self.m.properties().symmetric && self.n.properties().symmetric
    }

    /// One application of the pair map.
    pub fn step(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        Ok((self.m.eval(x, y)?, self.n.eval(x, y)?))
    }
}

/// The ready-made demonstration pair, available on the command line as
/// `example31`. Both means take the midpoint when the arguments are within 1
/// of each other; beyond that they split the midpoint by half the square root
/// of the gap:
///
/// M(x, y) = (x + y - sqrt(|x - y|)) / 2,  N(x, y) = (x + y + sqrt(|x - y|)) / 2.
///
/// Both members are symmetric and strict, the pair is comparable (M <= N) and
/// satisfies the strict gap contraction — yet both jump across |x - y| = 1,
/// and orbits started with a gap above 1 keep a gap converging to 1, not 0.
/// Requires a domain longer than 1 so that the outer branch is reachable.
pub fn example_pair(domain: Interval) -> Result<MeanPair> {
    if domain.length() <= 1.0 {
        return Err(Error::DomainIncompatible {
            mean: "example31".into(),
            domain,
            reason: "requires an interval longer than 1".into(),
        });
    }
    let properties = PropertySet {
        symmetric: true,
        strict: true,
        comparable_le: true,
        contractive_pair_member: true,
    };
    let m = Mean::from_fn("example31-m", domain, properties, |x, y| {
        Ok(example_step_values(x, y).0)
    });
    let n = Mean::from_fn("example31-n", domain, properties, |x, y| {
        Ok(example_step_values(x, y).1)
    });
    Ok(MeanPair::new(m, n)?.flag_comparable_unchecked())
}

/// Both values of the demonstration pair at once, with its branch invariant
/// enforced against rounding.
///
/// In exact arithmetic the outer branch maps gaps above 1 to gaps above 1
/// (sqrt(g) > 1 for g > 1), so an orbit started wide approaches gap 1 from
/// above but never jumps the discontinuity. In doubles that invariant breaks
/// within a few ulps of the branch point: the rounded outputs can land at a
/// computed gap <= 1, and the next iterate would take the midpoint branch
/// and collapse to the diagonal — a 0.5 error in the envelope limits. When
/// that happens the values are widened by single ulps, never past the
/// enclosing envelope [min, max]. At worst the pair freezes at the envelope
/// itself, which is within a few ulps of the true limit there, and the
/// orbit stopping rule reports that fixed point faithfully.
fn example_step_values(x: f64, y: f64) -> (f64, f64) {
    let s = x + y;
    let gap = (x - y).abs();
    if gap <= 1.0 {
        let mid = 0.5 * s;
        return (mid, mid);
    }
    let lo = x.min(y);
    let hi = x.max(y);
    let split = gap.sqrt();
    let mut m = clamp_between(0.5 * (s - split), x, y);
    let mut n = clamp_between(0.5 * (s + split), x, y);
    while n - m <= 1.0 {
        if m > lo {
            m = m.next_down();
        } else if n < hi {
            n = n.next_up();
        } else {
            break;
        }
    }
    (m, n)
}

/// Midpoint mean with a step across the unit gap: for |x - y| <= 1 the plain
/// midpoint, beyond it (x + y + offset) / 2. Valid offsets lie in [-1, 1]
/// (outside that range the value escapes [min, max] near |x - y| = 1).
///
/// Every member of this family is invariant under [`example_pair`], and the
/// offsets -1, 0, 1 are exactly its lower, transfinite and upper invariant
/// means. Available on the command line as `step:<offset>`.
pub fn step_mean(offset: f64, domain: Interval) -> Result<Mean> {
    if !(-1.0..=1.0).contains(&offset) || offset.is_nan() {
        return Err(Error::ParameterRange {
            name: "offset",
            value: offset,
            min: -1.0,
            max: 1.0,
        });
    }
    let properties = PropertySet {
        symmetric: true,
        strict: true,
        ..PropertySet::default()
    };
    Ok(Mean::from_fn(
        format!("step:{offset}"),
        domain,
        properties,
        move |x, y| {
            let s = x + y;
            let raw = if (x - y).abs() <= 1.0 {
                0.5 * s
            } else {
                0.5 * (s + offset)
            };
            Ok(clamp_between(raw, x, y))
        },
    ))
}

/// Pointwise min/max of a pair: ((M and N), (M or N)). The result is a
/// comparable pair by construction, and for symmetric pairs it generates
/// exactly the same orbits as the original (the unordered iterate pair
/// coincides step by step), which is what makes staged iteration on
/// symmetric non-comparable pairs well defined.
pub fn meet_join(pair: &MeanPair) -> MeanPair {
    let (m1, n1) = (pair.m.clone(), pair.n.clone());
    let (m2, n2) = (pair.m.clone(), pair.n.clone());
    let both = pair.m.properties();
    let other = pair.n.properties();
    let properties = PropertySet {
        symmetric: both.symmetric && other.symmetric,
        strict: both.strict && other.strict,
        comparable_le: true,
        contractive_pair_member: both.contractive_pair_member && other.contractive_pair_member,
    };
    let meet = Mean::from_fn(
        format!("meet({}, {})", pair.m.name(), pair.n.name()),
        pair.domain,
        properties,
        move |x, y| Ok(m1.eval(x, y)?.min(n1.eval(x, y)?)),
    );
    let join = Mean::from_fn(
        format!("join({}, {})", pair.m.name(), pair.n.name()),
        pair.domain,
        properties,
        move |x, y| Ok(m2.eval(x, y)?.max(n2.eval(x, y)?)),
    );
    MeanPair {
        m: meet,
        n: join,
        domain: pair.domain,
        comparable_le: true,
    }
}

/// Convex combination (1 - t) k1 + t k2 for t in [0, 1]. Convex combinations
/// preserve mean bounds, symmetry and strictness, and — the reason this
/// exists — invariance under any fixed pair.
pub fn convex_combine(k1: &Mean, k2: &Mean, t: f64) -> Result<Mean> {
    if !(0.0..=1.0).contains(&t) || t.is_nan() {
        return Err(Error::ParameterRange {
            name: "t",
            value: t,
            min: 0.0,
            max: 1.0,
        });
    }
    if k1.domain() != k2.domain() {
        return Err(Error::DomainMismatch {
            left: k1.domain(),
            right: k2.domain(),
        });
    }
    let p1 = k1.properties();
    let p2 = k2.properties();
    let properties = PropertySet {
        symmetric: p1.symmetric && p2.symmetric,
        strict: p1.strict && p2.strict,
        ..PropertySet::default()
    };
    let (a, b) = (k1.clone(), k2.clone());
    Ok(Mean::from_fn(
        format!("mix({}, {}; {t})", k1.name(), k2.name()),
        k1.domain(),
        properties,
        move |x, y| {
            let v = (1.0 - t) * a.eval(x, y)? + t * b.eval(x, y)?;
            Ok(clamp_between(v, x, y))
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;

    fn d(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn classical_values() {
        let dom = d(0.0, 10.0);
        let am = Mean::builtin(MeanKind::Arithmetic, dom).unwrap();
        assert_eq!(am.eval(2.0, 4.0).unwrap(), 3.0);
        // root-mean-square of (1, 7): sqrt((1 + 49) / 2) = sqrt(25)
        let rms = Mean::builtin(MeanKind::Power(2.0), dom).unwrap();
        assert_eq!(rms.eval(1.0, 7.0).unwrap(), 5.0);
        let dom_pos = d(1.0, 9.0);
        let gm = Mean::builtin(MeanKind::Geometric, dom_pos).unwrap();
        assert_eq!(gm.eval(1.0, 9.0).unwrap(), 3.0);
        let hm = Mean::builtin(MeanKind::Harmonic, dom_pos).unwrap();
        assert_eq!(hm.eval(1.0, 3.0).unwrap(), 1.5);
    }

    #[test]
    fn builtin_domain_preconditions() {
        assert!(Mean::builtin(MeanKind::Geometric, d(0.0, 10.0)).is_err());
        assert!(Mean::builtin(MeanKind::Harmonic, d(-1.0, 5.0)).is_err());
        assert!(Mean::builtin(MeanKind::Power(-1.0), d(0.0, 5.0)).is_err());
        assert!(Mean::builtin(MeanKind::Power(0.5), d(-2.0, 5.0)).is_err());
        assert!(Mean::builtin(MeanKind::Power(2.0), d(0.0, 5.0)).is_ok());
    }

    #[test]
    fn reflexivity_is_exact_for_builtins() {
        let dom = d(0.5, 10.0);
        for kind in [
            MeanKind::Arithmetic,
            MeanKind::Geometric,
            MeanKind::Harmonic,
            MeanKind::Power(3.0),
            MeanKind::Power(-2.0),
            MeanKind::Min,
            MeanKind::Max,
        ] {
            let m = Mean::builtin(kind, dom).unwrap();
            for t in dom.uniform_points(37) {
                assert_eq!(m.eval(t, t).unwrap(), t, "{kind} at ({t}, {t})");
            }
        }
    }

    #[test]
    fn eval_outside_domain_is_an_error() {
        let m = Mean::builtin(MeanKind::Arithmetic, d(0.0, 1.0)).unwrap();
        assert!(matches!(m.eval(0.5, 1.5), Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn example_pair_branch_values() {
        let pair = example_pair(d(0.0, 10.0)).unwrap();
        // within the unit gap both members are the midpoint
        assert_eq!(pair.m().eval(0.0, 0.5).unwrap(), 0.25);
        assert_eq!(pair.n().eval(0.0, 0.5).unwrap(), 0.25);
        // beyond it they split by +/- sqrt(gap)/2
        let lo = pair.m().eval(0.0, 3.0).unwrap();
        let hi = pair.n().eval(0.0, 3.0).unwrap();
        assert_eq!(lo, 0.5 * (3.0 - 3.0f64.sqrt()));
        assert_eq!(hi, 0.5 * (3.0 + 3.0f64.sqrt()));
        assert!((lo - 0.63397).abs() < 1e-5);
        // symmetric in the arguments, bit for bit
        assert_eq!(pair.m().eval(3.0, 0.0).unwrap(), lo);
        assert!(pair.comparable_le() && pair.symmetric());
    }

    #[test]
    fn example_pair_needs_room() {
        assert!(example_pair(d(0.0, 1.0)).is_err());
        assert!(example_pair(d(0.0, 1.5)).is_ok());
    }

    #[test]
    fn step_family_values_and_range() {
        let dom = d(0.0, 10.0);
        let tr = step_mean(0.0, dom).unwrap();
        assert_eq!(tr.eval(0.0, 3.0).unwrap(), 1.5);
        let lo = step_mean(-1.0, dom).unwrap();
        assert_eq!(lo.eval(0.0, 3.0).unwrap(), 1.0);
        let up = step_mean(1.0, dom).unwrap();
        assert_eq!(up.eval(0.0, 3.0).unwrap(), 2.0);
        // inside the unit gap the offset is ignored
        assert_eq!(lo.eval(2.0, 2.5).unwrap(), 2.25);
        assert_eq!(lo.eval(4.0, 4.0).unwrap(), 4.0);
        assert!(step_mean(1.1, dom).is_err());
        assert!(step_mean(-2.0, dom).is_err());
    }

    #[test]
    fn meet_join_orders_the_pair() {
        let dom = d(0.0, 10.0);
        let mx = Mean::builtin(MeanKind::Max, dom).unwrap();
        let mn = Mean::builtin(MeanKind::Min, dom).unwrap();
        // deliberately backwards pair: meet/join must re-sort it pointwise
        let pair = MeanPair::new(mx, mn).unwrap();
        let sorted = meet_join(&pair);
        for (x, y) in GridSpec::lattice(11).pairs(&dom).unwrap() {
            let a = sorted.m().eval(x, y).unwrap();
            let b = sorted.n().eval(x, y).unwrap();
            assert!(a <= b);
            assert_eq!(a, x.min(y));
            assert_eq!(b, x.max(y));
        }
        assert!(sorted.comparable_le());
    }

    #[test]
    fn meet_join_fixes_already_comparable_pairs() {
        let dom = d(1.0, 9.0);
        let pair = MeanPair::new(
            Mean::builtin(MeanKind::Geometric, dom).unwrap(),
            Mean::builtin(MeanKind::Arithmetic, dom).unwrap(),
        )
        .unwrap();
        let sorted = meet_join(&pair);
        for (x, y) in GridSpec::lattice(11).pairs(&dom).unwrap() {
            assert_eq!(sorted.m().eval(x, y).unwrap(), pair.m().eval(x, y).unwrap());
            assert_eq!(sorted.n().eval(x, y).unwrap(), pair.n().eval(x, y).unwrap());
        }
    }

    #[test]
    fn symmetric_composition_agrees_with_sorted_pair() {
        // for a symmetric K, K(M, N) and K(meet, join) coincide pointwise
        let dom = d(0.0, 10.0);
        let pair = example_pair(dom).unwrap();
        let sorted = meet_join(&pair);
        let k = Mean::builtin(MeanKind::Arithmetic, dom).unwrap();
        for (x, y) in GridSpec::lattice(21).pairs(&dom).unwrap() {
            let (a, b) = pair.step(x, y).unwrap();
            let (c, e) = sorted.step(x, y).unwrap();
            assert_eq!(k.eval(a, b).unwrap(), k.eval(c, e).unwrap());
        }
    }

    #[test]
    fn convex_combination_of_step_means() {
        let dom = d(0.0, 10.0);
        let lo = step_mean(-1.0, dom).unwrap();
        let up = step_mean(1.0, dom).unwrap();
        // (1 - t) lo + t up lands on offset 2t - 1
        for (t, offset) in [(0.5, 0.0), (0.75, 0.5), (0.0, -1.0), (1.0, 1.0)] {
            let mix = convex_combine(&lo, &up, t).unwrap();
            let target = step_mean(offset, dom).unwrap();
            for (x, y) in GridSpec::lattice(21).pairs(&dom).unwrap() {
                let got = mix.eval(x, y).unwrap();
                let want = target.eval(x, y).unwrap();
                assert!(
                    (got - want).abs() < 1e-12,
                    "t = {t} at ({x}, {y}): {got} vs {want}"
                );
            }
        }
        assert!(convex_combine(&lo, &up, 1.2).is_err());
        assert!(convex_combine(&lo, &up, -0.1).is_err());
        assert!(convex_combine(&lo, &up, f64::NAN).is_err());
    }

    #[test]
    fn pair_requires_shared_domain() {
        let a = Mean::builtin(MeanKind::Arithmetic, d(0.0, 1.0)).unwrap();
        let b = Mean::builtin(MeanKind::Arithmetic, d(0.0, 2.0)).unwrap();
        assert!(MeanPair::new(a, b).is_err());
    }

    #[test]
    fn comparable_flag_needs_evidence() {
        let dom = d(1.0, 9.0);
        let gm = Mean::builtin(MeanKind::Geometric, dom).unwrap();
        let am = Mean::builtin(MeanKind::Arithmetic, dom).unwrap();
        let ok = MeanPair::new(gm.clone(), am.clone())
            .unwrap()
            .flag_comparable_checked(&GridSpec::lattice(21));
        assert!(ok.is_ok_and(|p| p.comparable_le()));
        // backwards: arithmetic <= geometric fails on the grid
        let bad = MeanPair::new(am, gm)
            .unwrap()
            .flag_comparable_checked(&GridSpec::lattice(21));
        assert!(bad.is_err());
    }
}
