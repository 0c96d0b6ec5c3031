//! Grid verification of invariance and its consequences.
//!
//! A mean K is invariant under a pair (M, N) when K(x, y) =
//! K(M(x, y), N(x, y)) everywhere. Everything here measures that equation
//! and the structure around it on sample grids:
//!
//! - [`invariance_residual`]: the exact pointwise residual
//!   |K(x, y) − K(M(x, y), N(x, y))|, maximized over the grid with a
//!   deterministic witness.
//! - [`symmetry_check`]: invariant means of symmetric pairs must themselves
//!   be symmetric; verify the numeric instance.
//! - [`ordering_check`]: every invariant mean is trapped between the lower
//!   and upper envelope limits; verify, and record which candidates attain
//!   the extremes.
//! - [`decomposition_check`]: a two-variable invariant *function* (not
//!   necessarily a mean) factors through the staged invariant mean as
//!   Φ = f ∘ Tr with f(t) = Φ(t, t); verify the factorization and, when f
//!   is strictly monotone on the diagonal samples, recover Tr as f⁻¹ ∘ Φ
//!   and cross-check it against the staged engine.
//!
//! Every report is "on the grid": residual 0 on a grid certifies nothing
//! off it, and all reports carry the grid size they were computed from.
//! Witnesses are deterministic — among points realizing a maximum, the
//! lexicographically smallest is reported.

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::grid::GridSpec;
use crate::mean::{Mean, MeanPair};
use crate::orbit::{lower_upper, ConvergencePolicy};
use crate::transfinite::{transfinite_mean, StagePolicy};
use serde::Serialize;

/// Residuals below this count as "invariant on the grid". Sits well above
/// the orbit gap tolerance (1e-12) to absorb accumulated rounding, and well
/// below any genuine invariance failure seen in practice (those start around
/// 1e-2).
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Pass threshold for the decomposition residuals (steps (c) and (d) of
/// [`decomposition_check`]), one decade looser than [`RESIDUAL_TOL`] because
/// the staged-mean truncation enters the comparison twice.
pub const DECOMPOSITION_TOL: f64 = 1e-8;

/// Running maximum with the lexicographically-smallest-witness tie rule.
struct MaxTracker {
    value: f64,
    witness: (f64, f64),
}

impl MaxTracker {
    fn new() -> Self {
        MaxTracker {
            value: f64::NEG_INFINITY,
            witness: (f64::INFINITY, f64::INFINITY),
        }
    }

    fn update(&mut self, value: f64, point: (f64, f64)) {
        if value > self.value || (value == self.value && point < self.witness) {
            self.value = value;
            self.witness = point;
        }
    }
}

/// Grid supremum of the invariance residual of one mean under one pair.
#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    /// Name of the tested mean.
    pub mean: String,
    /// max over the grid of |K(x, y) − K applied after `iterations` pair
    /// steps|.
    pub max_residual: f64,
    /// Lexicographically smallest grid point realizing the maximum.
    pub witness: (f64, f64),
    pub grid_size: usize,
    /// How many pair applications were composed inside K (1 for the plain
    /// invariance equation).
    pub iterations: usize,
}

/// Measure |K(x, y) − K(M(x, y), N(x, y))| over the grid.
///
/// # Example
/// ```
/// use meanlab::invariance::invariance_residual;
/// use meanlab::{example_pair, step_mean, GridSpec, Interval};
/// let d = Interval::new(0.0, 10.0).unwrap();
/// let pair = example_pair(d).unwrap();
/// let k = step_mean(0.0, d).unwrap();
/// let report = invariance_residual(&k, &pair, &GridSpec::lattice(21)).unwrap();
/// assert!(report.max_residual < 1e-12);
/// ```
pub fn invariance_residual(k: &Mean, pair: &MeanPair, grid: &GridSpec) -> Result<InvarianceReport> {
    invariance_residual_iterated(k, pair, grid, 1)
}

/// Like [`invariance_residual`], but composes the pair `iterations` times
/// before re-evaluating K. An invariant mean has small residual for every
/// iteration count, so checking a second composition guards against a
/// first-order coincidence.
pub fn invariance_residual_iterated(
    k: &Mean,
    pair: &MeanPair,
    grid: &GridSpec,
    iterations: usize,
) -> Result<InvarianceReport> {
    if iterations == 0 {
        return Err(Error::InvalidPolicy(
            "residual iteration count must be >= 1".into(),
        ));
    }
    if k.domain() != pair.domain() {
        return Err(Error::DomainMismatch {
            left: k.domain(),
            right: pair.domain(),
        });
    }
    let points = grid.pairs(&pair.domain())?;
    let mut max = MaxTracker::new();
    for &(x, y) in &points {
        let (mut u, mut v) = (x, y);
        for _ in 0..iterations {
            (u, v) = pair.step(u, v)?;
        }
        let residual = (k.eval(x, y)? - k.eval(u, v)?).abs();
        max.update(residual, (x, y));
    }
    Ok(InvarianceReport {
        mean: k.name().to_string(),
        max_residual: max.value,
        witness: max.witness,
        grid_size: points.len(),
        iterations,
    })
}

/// Outcome of checking that a grid-invariant mean of a symmetric pair is
/// itself symmetric on the grid.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryReport {
    pub mean: String,
    pub invariance_residual: f64,
    pub residual_tol: f64,
    /// Residual stayed below `residual_tol`, so the symmetry consequence
    /// applies and was measured.
    pub invariant_on_grid: bool,
    /// max |K(x, y) − K(y, x)|; absent when the mean was not invariant on
    /// the grid (nothing to check then).
    pub max_asymmetry: Option<f64>,
    pub witness: Option<(f64, f64)>,
    /// False only in the inconsistent case: invariant on the grid yet
    /// measurably asymmetric — which would point at an implementation bug,
    /// not at the mathematics.
    pub consistent: bool,
    pub grid_size: usize,
}

/// For a symmetric pair, check the consequence "invariant implies
/// symmetric" at grid resolution. Errors when the pair is not symmetric.
pub fn symmetry_check(k: &Mean, pair: &MeanPair, grid: &GridSpec) -> Result<SymmetryReport> {
    if !pair.symmetric() {
        return Err(Error::PairNotSymmetric);
    }
    let invariance = invariance_residual(k, pair, grid)?;
    let invariant_on_grid = invariance.max_residual < RESIDUAL_TOL;
    if !invariant_on_grid {
        return Ok(SymmetryReport {
            mean: invariance.mean,
            invariance_residual: invariance.max_residual,
            residual_tol: RESIDUAL_TOL,
            invariant_on_grid,
            max_asymmetry: None,
            witness: None,
            consistent: true,
            grid_size: invariance.grid_size,
        });
    }
    let points = grid.pairs(&pair.domain())?;
    let mut max = MaxTracker::new();
    for &(x, y) in &points {
        max.update((k.eval(x, y)? - k.eval(y, x)?).abs(), (x, y));
    }
    Ok(SymmetryReport {
        mean: invariance.mean,
        invariance_residual: invariance.max_residual,
        residual_tol: RESIDUAL_TOL,
        invariant_on_grid,
        max_asymmetry: Some(max.value),
        witness: Some(max.witness),
        consistent: max.value < RESIDUAL_TOL,
        grid_size: points.len(),
    })
}

/// Ordering measurements for one invariant candidate.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateOrdering {
    pub name: String,
    /// max over the grid of (lower limit − K), i.e. how far K dips below
    /// the lower envelope limit; negative when it never does.
    pub max_below_lower: f64,
    /// max over the grid of (K − upper limit).
    pub max_above_upper: f64,
    /// Both excursions stay below the residual tolerance.
    pub within_bounds: bool,
    /// K coincides with the lower envelope limit across the whole grid.
    pub attains_lower: bool,
    /// K coincides with the upper envelope limit across the whole grid.
    pub attains_upper: bool,
}

/// A candidate left out of the ordering comparison because it failed the
/// invariance prerequisite.
#[derive(Debug, Clone, Serialize)]
pub struct ExcludedCandidate {
    pub name: String,
    pub max_residual: f64,
    pub witness: (f64, f64),
}

/// Result of [`ordering_check`].
#[derive(Debug, Clone, Serialize)]
pub struct OrderingReport {
    pub residual_tol: f64,
    pub included: Vec<CandidateOrdering>,
    pub excluded: Vec<ExcludedCandidate>,
    pub grid_size: usize,
    /// Grid points whose envelope orbits hit the step budget; their limits
    /// are approximate.
    pub approximate_points: usize,
    /// Every included candidate stayed within the envelope bounds.
    pub all_within: bool,
}

/// Check that every invariant candidate lies between the lower and upper
/// envelope limits of the pair, point by point. Candidates whose invariance
/// residual exceeds [`RESIDUAL_TOL`] are excluded (with their witness)
/// rather than failed: the ordering statement only speaks about invariant
/// means.
pub fn ordering_check(
    pair: &MeanPair,
    candidates: &[Mean],
    grid: &GridSpec,
    policy: &ConvergencePolicy,
) -> Result<OrderingReport> {
    policy.validate()?;
    let points = grid.pairs(&pair.domain())?;
    let mut envelopes = Vec::with_capacity(points.len());
    let mut approximate_points = 0;
    for &(x, y) in &points {
        let limits = lower_upper(pair, x, y, policy)?;
        if !limits.converged {
            approximate_points += 1;
        }
        envelopes.push(limits);
    }
    let mut included = Vec::new();
    let mut excluded = Vec::new();
    for k in candidates {
        let invariance = invariance_residual(k, pair, grid)?;
        if invariance.max_residual >= RESIDUAL_TOL {
            excluded.push(ExcludedCandidate {
                name: invariance.mean,
                max_residual: invariance.max_residual,
                witness: invariance.witness,
            });
            continue;
        }
        let mut below = MaxTracker::new();
        let mut above = MaxTracker::new();
        let mut off_lower = MaxTracker::new();
        let mut off_upper = MaxTracker::new();
        for (&(x, y), limits) in points.iter().zip(&envelopes) {
            let kv = k.eval(x, y)?;
            below.update(limits.lo - kv, (x, y));
            above.update(kv - limits.up, (x, y));
            off_lower.update((kv - limits.lo).abs(), (x, y));
            off_upper.update((kv - limits.up).abs(), (x, y));
        }
        included.push(CandidateOrdering {
            name: k.name().to_string(),
            max_below_lower: below.value,
            max_above_upper: above.value,
            within_bounds: below.value < RESIDUAL_TOL && above.value < RESIDUAL_TOL,
            attains_lower: off_lower.value < RESIDUAL_TOL,
            attains_upper: off_upper.value < RESIDUAL_TOL,
        });
    }
    let all_within = included.iter().all(|c| c.within_bounds);
    Ok(OrderingReport {
        residual_tol: RESIDUAL_TOL,
        included,
        excluded,
        grid_size: points.len(),
        approximate_points,
        all_within,
    })
}

/// Result of [`decomposition_check`]: the four steps of factoring an
/// invariant function through the staged mean.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    /// (a) max |Φ(x, y) − Φ(M(x, y), N(x, y))| over the grid.
    pub invariance_residual: f64,
    pub invariance_witness: (f64, f64),
    pub invariance_holds: bool,
    /// (b) number of diagonal samples defining f(t) = Φ(t, t).
    pub diagonal_samples: usize,
    /// (c) max |Φ(x, y) − f(Tr(x, y))| over the grid.
    pub composition_residual: f64,
    pub composition_witness: (f64, f64),
    pub composition_holds: bool,
    /// (d) whether the inverse cross-check ran (needs f strictly monotone
    /// on the diagonal samples).
    pub inverse_checked: bool,
    /// (d) max |f⁻¹(Φ(x, y)) − Tr(x, y)| when checked.
    pub inverse_residual: Option<f64>,
    pub inverse_witness: Option<(f64, f64)>,
    pub inverse_holds: Option<bool>,
    /// Why (d) was skipped, when it was.
    pub inverse_skip_reason: Option<String>,
    pub grid_size: usize,
}

/// Check the factorization Φ = f ∘ Tr of an invariant two-variable function.
///
/// Steps: (a) measure the invariance residual of Φ itself; (b) sample
/// f(t) := Φ(t, t) on the grid's diagonal; (c) measure |Φ − f(Tr)| with Tr
/// from the staged engine; (d) when f is strictly monotone on the samples,
/// invert it by bisection and cross-check f⁻¹ ∘ Φ against Tr. A constant or
/// otherwise non-injective f skips (d) with a reason — a non-monotone but
/// sample-injective f is also skipped, since bisection inversion needs
/// monotonicity.
///
/// Φ may be any expression over x and y; it need not be a mean. Points where
/// the staged run ends off the diagonal make Tr undefined and the check
/// fails with that error.
pub fn decomposition_check(
    phi: &Expr,
    pair: &MeanPair,
    grid: &GridSpec,
    policy: &StagePolicy,
) -> Result<DecompositionReport> {
    let eval_phi = |x: f64, y: f64| -> Result<f64> {
        phi.eval(x, y).map_err(|e| Error::Eval { x, y, source: e })
    };
    let domain = pair.domain();
    let points = grid.pairs(&domain)?;

    // (a) invariance of Φ under one pair application.
    let mut invariance = MaxTracker::new();
    for &(x, y) in &points {
        let (u, v) = pair.step(x, y)?;
        invariance.update((eval_phi(x, y)? - eval_phi(u, v)?).abs(), (x, y));
    }

    // (b) the diagonal trace f(t) = Φ(t, t).
    let diag = grid.diagonal(&domain)?;
    let f = |t: f64| eval_phi(t, t);
    let mut f_vals = Vec::with_capacity(diag.len());
    for &t in &diag {
        f_vals.push(f(t)?);
    }

    // (c) Φ against f composed with the staged mean.
    let tr = transfinite_mean(pair, policy)?;
    let mut tr_vals = Vec::with_capacity(points.len());
    let mut composition = MaxTracker::new();
    for &(x, y) in &points {
        let t = tr.eval(x, y)?;
        tr_vals.push(t);
        composition.update((eval_phi(x, y)? - f(t)?).abs(), (x, y));
    }

    // (d) invert f when the diagonal samples are strictly monotone.
    let increasing = f_vals.windows(2).all(|w| w[0] < w[1]);
    let decreasing = f_vals.windows(2).all(|w| w[0] > w[1]);
    let injective = {
        let mut sorted: Vec<u64> = f_vals.iter().map(|v| v.to_bits()).collect();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    };
    let (inverse_checked, skip_reason) = if increasing || decreasing {
        (true, None)
    } else if injective {
        (
            false,
            Some("f is injective but not monotone on the diagonal samples; bisection inversion needs monotonicity".to_string()),
        )
    } else {
        (
            false,
            Some("f is not injective on the diagonal samples".to_string()),
        )
    };
    let mut inverse_residual = None;
    let mut inverse_witness = None;
    let mut inverse_holds = None;
    if inverse_checked {
        let mut inverse = MaxTracker::new();
        for (&(x, y), &t_engine) in points.iter().zip(&tr_vals) {
            let t_inverted =
                invert_monotone(&f, domain.lo(), domain.hi(), increasing, eval_phi(x, y)?)?;
            inverse.update((t_inverted - t_engine).abs(), (x, y));
        }
        inverse_residual = Some(inverse.value);
        inverse_witness = Some(inverse.witness);
        inverse_holds = Some(inverse.value < DECOMPOSITION_TOL);
    }
    Ok(DecompositionReport {
        invariance_residual: invariance.value,
        invariance_witness: invariance.witness,
        invariance_holds: invariance.value < RESIDUAL_TOL,
        diagonal_samples: diag.len(),
        composition_residual: composition.value,
        composition_witness: composition.witness,
        composition_holds: composition.value < DECOMPOSITION_TOL,
        inverse_checked,
        inverse_residual,
        inverse_witness,
        inverse_holds,
        inverse_skip_reason: skip_reason,
        grid_size: points.len(),
    })
}

/// Bisection solve of f(t) = target over [lo, hi] for strictly monotone f.
/// Targets outside the attained range clamp to the nearer endpoint.
fn invert_monotone(
    f: &impl Fn(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    increasing: bool,
    target: f64,
) -> Result<f64> {
    let f_lo = f(lo)?;
    let f_hi = f(hi)?;
    let (bottom, top) = if increasing {
        (f_lo, f_hi)
    } else {
        (f_hi, f_lo)
    };
    if target <= bottom {
        return Ok(if increasing { lo } else { hi });
    }
    if target >= top {
        return Ok(if increasing { hi } else { lo });
    }
    let (mut a, mut b) = (lo, hi);
    let width_tol = 1e-15 * (hi - lo);
    for _ in 0..200 {
        if b - a <= width_tol {
            break;
        }
        let mid = 0.5 * (a + b);
        if (f(mid)? < target) == increasing {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{mean_from_source, parse};
    use crate::interval::Interval;
    use crate::mean::{example_pair, step_mean, Mean, MeanKind, MeanPair};

    fn domain() -> Interval {
        Interval::new(0.0, 10.0).unwrap()
    }

    fn small_grid() -> GridSpec {
        GridSpec {
            axis_points: 21,
            random_pairs: 100,
            ..GridSpec::default()
        }
    }

    #[test]
    fn step_family_is_invariant_under_the_example_pair() {
        let pair = example_pair(domain()).unwrap();
        for c in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            let k = step_mean(c, domain()).unwrap();
            let report = invariance_residual(&k, &pair, &small_grid()).unwrap();
            assert!(
                report.max_residual < 1e-12,
                "offset {c}: residual {} at {:?}",
                report.max_residual,
                report.witness
            );
            let twice = invariance_residual_iterated(&k, &pair, &small_grid(), 2).unwrap();
            assert!(twice.max_residual < 1e-12, "offset {c} composed twice");
        }
    }

    #[test]
    fn idempotent_composition_has_exactly_zero_residual() {
        let a = Mean::builtin(MeanKind::Arithmetic, domain()).unwrap();
        let pair = MeanPair::new(a.clone(), a.clone()).unwrap();
        let report = invariance_residual(&a, &pair, &small_grid()).unwrap();
        assert_eq!(report.max_residual, 0.0);
    }

    #[test]
    fn geometric_mean_fails_invariance_under_the_example_pair() {
        let d = Interval::new(1.0, 10.0).unwrap();
        let pair = example_pair(d).unwrap();
        let g = Mean::builtin(MeanKind::Geometric, d).unwrap();
        let report = invariance_residual(&g, &pair, &small_grid()).unwrap();
        assert!(report.max_residual > 1e-2);
        let (wx, wy) = report.witness;
        assert!((wx - wy).abs() > 1.0, "failures need the jump branch");
    }

    #[test]
    fn witness_ties_resolve_to_the_lexicographically_smallest_point() {
        let d = Interval::new(0.0, 1.0).unwrap();
        let a = Mean::builtin(MeanKind::Arithmetic, d).unwrap();
        let pair = MeanPair::new(a.clone(), a).unwrap();
        let grid = GridSpec::lattice(3);
        let projection = mean_from_source("x", d, &grid).unwrap();
        // Residual |x − (x+y)/2| = |x − y|/2 peaks at both (0, 1) and (1, 0).
        let report = invariance_residual(&projection, &pair, &grid).unwrap();
        assert_eq!(report.max_residual, 0.5);
        assert_eq!(report.witness, (0.0, 1.0));
    }

    #[test]
    fn domain_mismatch_is_rejected() {
        let pair = example_pair(domain()).unwrap();
        let k = step_mean(0.0, Interval::new(0.0, 5.0).unwrap()).unwrap();
        assert!(matches!(
            invariance_residual(&k, &pair, &small_grid()),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn symmetry_check_confirms_invariant_means_and_skips_others() {
        let pair = example_pair(domain()).unwrap();
        let mid = step_mean(0.0, domain()).unwrap();
        let report = symmetry_check(&mid, &pair, &small_grid()).unwrap();
        assert!(report.invariant_on_grid);
        assert!(report.consistent);
        assert!(report.max_asymmetry.unwrap() < 1e-12);

        let projection = mean_from_source("x", domain(), &small_grid()).unwrap();
        let report = symmetry_check(&projection, &pair, &small_grid()).unwrap();
        assert!(!report.invariant_on_grid);
        assert!(report.max_asymmetry.is_none());
        assert!(report.consistent);
    }

    #[test]
    fn symmetry_check_requires_a_symmetric_pair() {
        let grid = small_grid();
        let px = mean_from_source("x", domain(), &grid).unwrap();
        let py = mean_from_source("y", domain(), &grid).unwrap();
        let pair = MeanPair::new(px, py).unwrap();
        let k = step_mean(0.0, domain()).unwrap();
        assert!(matches!(
            symmetry_check(&k, &pair, &grid),
            Err(Error::PairNotSymmetric)
        ));
    }

    #[test]
    fn ordering_traps_invariant_candidates_between_the_envelope_limits() {
        let d = Interval::new(1.0, 10.0).unwrap();
        let pair = example_pair(d).unwrap();
        let mut candidates = Vec::new();
        for c in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            candidates.push(step_mean(c, d).unwrap());
        }
        candidates.push(Mean::builtin(MeanKind::Geometric, d).unwrap());
        let grid = GridSpec {
            axis_points: 11,
            random_pairs: 50,
            ..GridSpec::default()
        };
        let report =
            ordering_check(&pair, &candidates, &grid, &ConvergencePolicy::default()).unwrap();
        assert_eq!(report.included.len(), 5);
        assert_eq!(report.excluded.len(), 1);
        assert!(report.all_within);
        assert_eq!(report.approximate_points, 0);
        assert!(report.excluded[0].max_residual > 1e-2);
        let by_name = |needle: &str| {
            report
                .included
                .iter()
                .find(|c| c.name.contains(needle))
                .unwrap()
        };
        assert!(by_name("step:-1").attains_lower);
        assert!(!by_name("step:-1").attains_upper);
        assert!(by_name("step:1").attains_upper);
        assert!(!by_name("step:0.5").attains_lower);
        assert!(!by_name("step:0.5").attains_upper);
    }

    #[test]
    fn conserved_sum_decomposes_through_the_staged_mean() {
        let pair = example_pair(domain()).unwrap();
        let phi = parse("x + y").unwrap();
        let report =
            decomposition_check(&phi, &pair, &small_grid(), &StagePolicy::default()).unwrap();
        assert!(
            report.invariance_holds,
            "residual {}",
            report.invariance_residual
        );
        assert!(report.invariance_residual < 1e-12);
        assert!(
            report.composition_holds,
            "residual {}",
            report.composition_residual
        );
        assert!(report.inverse_checked);
        assert!(report.inverse_holds.unwrap());
        assert!(report.inverse_residual.unwrap() < DECOMPOSITION_TOL);
    }

    #[test]
    fn constant_functions_are_invariant_but_decline_inversion() {
        let pair = example_pair(domain()).unwrap();
        let phi = parse("7").unwrap();
        let report =
            decomposition_check(&phi, &pair, &small_grid(), &StagePolicy::default()).unwrap();
        assert!(report.invariance_holds);
        assert_eq!(report.composition_residual, 0.0);
        assert!(!report.inverse_checked);
        assert!(report
            .inverse_skip_reason
            .unwrap()
            .contains("not injective"));
    }

    #[test]
    fn non_monotone_injective_diagonals_decline_inversion_with_reason() {
        let d = Interval::new(0.0, 3.0).unwrap();
        let pair = example_pair(d).unwrap();
        // A function of the conserved sum: invariant, f(t) = (t − 1.03)²
        // dips and rises, and no two diagonal samples collide.
        let phi = parse("pow((x+y)/2 - 1.03, 2)").unwrap();
        let report =
            decomposition_check(&phi, &pair, &small_grid(), &StagePolicy::default()).unwrap();
        assert!(report.invariance_holds);
        assert!(report.composition_holds);
        assert!(!report.inverse_checked);
        assert!(report.inverse_skip_reason.unwrap().contains("not monotone"));
    }

    #[test]
    fn non_invariant_functions_are_reported_with_a_witness() {
        let d = Interval::new(1.0, 4.0).unwrap();
        let pair = MeanPair::new(
            Mean::builtin(MeanKind::Arithmetic, d).unwrap(),
            Mean::builtin(MeanKind::Geometric, d).unwrap(),
        )
        .unwrap();
        let phi = parse("x * y").unwrap();
        let report =
            decomposition_check(&phi, &pair, &small_grid(), &StagePolicy::default()).unwrap();
        assert!(!report.invariance_holds);
        assert!(report.invariance_residual > 0.1);
    }

    #[test]
    fn inversion_recovers_the_staged_mean_for_a_decreasing_f() {
        let pair = example_pair(domain()).unwrap();
        let phi = parse("20 - x - y").unwrap();
        let report =
            decomposition_check(&phi, &pair, &small_grid(), &StagePolicy::default()).unwrap();
        assert!(report.invariance_holds);
        assert!(report.inverse_checked);
        assert!(report.inverse_holds.unwrap());
    }
}
