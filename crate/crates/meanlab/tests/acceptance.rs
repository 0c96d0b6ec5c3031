//! End-to-end acceptance suite. Each test prints one `criterion N: PASS`
//! line on success; a failure panics with the measured numbers, so the
//! printed transcript always tells which guarantees hold.
//!
//! Tolerances are pinned here as constants rather than imported, so a drift
//! in library defaults cannot silently weaken the gate.

use meanlab::expr::{self, WeightFn};
use meanlab::grid::GridSpec;
use meanlab::invariance::{self, RESIDUAL_TOL};
use meanlab::limitlike::{self, EventuallyPeriodic, TailFunctional};
use meanlab::mean::{convex_combine, example_pair, meet_join, step_mean, Mean, MeanKind, MeanPair};
use meanlab::orbit::{self, ConvergencePolicy};
use meanlab::transfinite::{self, StagePolicy};
use meanlab::Interval;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Closed-form targets must match orbit limits to this accuracy.
const VALUE_TOL: f64 = 1e-9;
/// Exact algebraic identities (conservation, AGM cross-agreement).
const EXACT_TOL: f64 = 1e-12;
/// Gap limits of the wide/narrow orbit families.
const GAP_WIDE_TOL: f64 = 1e-9;
const GAP_NARROW_TOL: f64 = 1e-12;
/// A genuinely non-invariant candidate must exceed this residual.
const NON_INVARIANT_FLOOR: f64 = 1e-2;

fn domain() -> Interval {
    Interval::new(0.0, 10.0).unwrap()
}

fn pair31() -> MeanPair {
    example_pair(domain()).unwrap()
}

fn lattice(n: usize) -> Vec<f64> {
    domain().uniform_points(n)
}

// Criterion 1: the orbit-computed lower/upper/staged means agree with the
// closed forms (midpoint shifted by -1/2, +1/2, 0 beyond unit gap) across
// the full 101 x 101 lattice, including pairs straddling the branch, fast.
#[test]
fn criterion_1_closed_forms_match_on_the_lattice() {
    let started = Instant::now();
    let pair = pair31();
    let policy = ConvergencePolicy::default();
    let stages = StagePolicy::default();
    let lo_ref = step_mean(-1.0, domain()).unwrap();
    let up_ref = step_mean(1.0, domain()).unwrap();
    let tr_ref = step_mean(0.0, domain()).unwrap();

    let mut worst: (f64, (f64, f64), &str) = (0.0, (0.0, 0.0), "");
    let points = lattice(101);
    for &x in &points {
        for &y in &points {
            let lu = orbit::lower_upper(&pair, x, y, &policy).unwrap();
            assert!(lu.converged, "orbit did not converge at ({x}, {y})");
            let report = transfinite::transfinite_iterate(&pair, x, y, &stages).unwrap();
            assert!(
                !report.approximate(),
                "staged run approximate at ({x}, {y})"
            );
            for (value, reference, label) in [
                (lu.lo, &lo_ref, "lo"),
                (lu.up, &up_ref, "up"),
                (report.tr_value, &tr_ref, "tr"),
            ] {
                let err = (value - reference.eval(x, y).unwrap()).abs();
                if err > worst.0 {
                    worst = (err, (x, y), label);
                }
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        worst.0 <= VALUE_TOL,
        "worst deviation {} for {} at {:?}",
        worst.0,
        worst.2,
        worst.1
    );
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "lattice sweep took {elapsed:?}, budget is 10 s"
    );
    println!(
        "criterion 1: PASS - lo/up/tr match the closed forms on the 101x101 lattice, \
         worst deviation {:.3e} ({:?} in {:.2?})",
        worst.0, worst.2, elapsed
    );
}

// Criterion 2: the pair preserves x + y, so every stored orbit row must
// carry the starting sum up to accumulated rounding.
#[test]
fn criterion_2_orbit_rows_conserve_the_coordinate_sum() {
    let pair = pair31();
    let policy = ConvergencePolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d65616e);
    let mut worst: (f64, (f64, f64)) = (0.0, (0.0, 0.0));
    for _ in 0..1_000 {
        let x = rng.gen_range(0.0..=10.0);
        let y = rng.gen_range(0.0..=10.0);
        let trace = orbit::iterate(&pair, x, y, &policy).unwrap();
        assert!(trace.converged(), "orbit from ({x}, {y}) did not converge");
        assert!(!trace.truncated(), "orbit from ({x}, {y}) dropped rows");
        let sum = x + y;
        for &(a, b) in trace.pairs() {
            let drift = ((a + b) - sum).abs();
            if drift > worst.0 {
                worst = (drift, (x, y));
            }
        }
    }
    assert!(
        worst.0 <= EXACT_TOL,
        "conservation violated: |x_n + y_n - (x + y)| reached {:e} on the orbit from {:?}",
        worst.0,
        worst.1
    );
    println!(
        "criterion 2: PASS - x_n + y_n is conserved along 1000 random orbits, worst drift {:.3e}",
        worst.0
    );
}

// Criterion 3: orbit gaps have a two-sided limit law. Starts with gap > 1
// settle at gap 1 (from above); starts with gap <= 1 collapse to gap 0.
#[test]
fn criterion_3_final_gaps_split_by_the_unit_branch() {
    let pair = pair31();
    let policy = ConvergencePolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x67617073);
    let (mut wide, mut narrow) = (0usize, 0usize);
    let (mut worst_wide, mut worst_narrow) = (0.0f64, 0.0f64);
    for _ in 0..1_000 {
        let x = rng.gen_range(0.0..=10.0);
        let y = rng.gen_range(0.0..=10.0);
        let trace = orbit::iterate(&pair, x, y, &policy).unwrap();
        assert!(trace.converged(), "orbit from ({x}, {y}) did not converge");
        if (x - y).abs() > 1.0 {
            wide += 1;
            worst_wide = worst_wide.max((trace.final_gap() - 1.0).abs());
        } else {
            narrow += 1;
            worst_narrow = worst_narrow.max(trace.final_gap());
        }
    }
    assert!(
        wide >= 100 && narrow >= 100,
        "sampling missed a branch: {wide} wide starts, {narrow} narrow starts"
    );
    assert!(
        worst_wide <= GAP_WIDE_TOL,
        "wide-start gap limit off by {worst_wide:e}"
    );
    assert!(
        worst_narrow <= GAP_NARROW_TOL,
        "narrow-start gap limit off by {worst_narrow:e}"
    );
    println!(
        "criterion 3: PASS - final gap within {worst_wide:.3e} of 1 on {wide} wide starts, \
         within {worst_narrow:.3e} of 0 on {narrow} narrow starts"
    );
}

// Criterion 4: staged iteration needs exactly one limit stage and one
// successor step to reach the diagonal from any wide start; the worked
// start (0, 3) lands on stage pair (1, 2) and final value 3/2.
#[test]
fn criterion_4_one_limit_stage_plus_one_successor_reaches_the_diagonal() {
    let pair = pair31();
    let stages = StagePolicy::default();

    let report = transfinite::transfinite_iterate(&pair, 0.0, 3.0, &stages).unwrap();
    assert_eq!(report.limit_stages_used, 1);
    assert!(report.terminated_diagonal);
    assert!(!report.approximate());
    assert_eq!(report.stage_pairs.len(), 1);
    assert_eq!(report.successor_pairs.len(), 1);
    let (a, b) = report.stage_pairs[0];
    assert!(
        (a - 1.0).abs() <= VALUE_TOL && (b - 2.0).abs() <= VALUE_TOL,
        "stage pair from (0, 3) is ({a}, {b}), expected (1, 2)"
    );
    let (fa, fb) = report.final_pair;
    assert!(
        (fa - 1.5).abs() <= VALUE_TOL && (fb - 1.5).abs() <= VALUE_TOL,
        "final pair from (0, 3) is ({fa}, {fb}), expected (1.5, 1.5)"
    );
    assert!((report.tr_value - 1.5).abs() <= VALUE_TOL);

    let points = lattice(41);
    let mut checked = 0usize;
    for &x in &points {
        for &y in &points {
            if (x - y).abs() <= 1.0 {
                continue;
            }
            let r = transfinite::transfinite_iterate(&pair, x, y, &stages).unwrap();
            assert_eq!(r.limit_stages_used, 1, "extra limit stages at ({x}, {y})");
            assert_eq!(
                r.successor_pairs.len(),
                1,
                "successor count at ({x}, {y}) is {}",
                r.successor_pairs.len()
            );
            assert!(
                r.terminated_diagonal && !r.approximate(),
                "staged run failed to reach the diagonal at ({x}, {y})"
            );
            checked += 1;
        }
    }
    println!(
        "criterion 4: PASS - one limit stage plus one successor step reaches the diagonal \
         at (0, 3) and at {checked} wide lattice starts"
    );
}

/// The candidates that should all be invariant under the example pair: the
/// two tail-functional means, the staged mean, the five closed-form shifted
/// midpoints, and a convex combination of the two extreme ones (invariance
/// is preserved under convex combination, so this must pass too).
fn invariant_candidates(pair: &MeanPair) -> Vec<Mean> {
    let policy = ConvergencePolicy::default();
    let mut out = vec![
        limitlike::orbit_mean(pair, TailFunctional::Liminf, policy).unwrap(),
        limitlike::orbit_mean(pair, TailFunctional::Limsup, policy).unwrap(),
        transfinite::transfinite_mean(pair, &StagePolicy::default()).unwrap(),
    ];
    for c in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        out.push(step_mean(c, domain()).unwrap());
    }
    let lo = step_mean(-1.0, domain()).unwrap();
    let up = step_mean(1.0, domain()).unwrap();
    out.push(convex_combine(&lo, &up, 0.75).unwrap());
    out
}

// Criterion 5: every candidate above has invariance residual below 1e-9 on
// the standard grid, while the geometric mean misses by more than 1e-2 at
// a witness the report must reproduce.
#[test]
fn criterion_5_invariance_residuals_separate_the_family_from_geometric() {
    let pair = pair31();
    let grid = GridSpec::default();
    let candidates = invariant_candidates(&pair);
    let total = candidates.len();
    let mut worst: (f64, String) = (0.0, String::new());
    for k in candidates {
        let report = invariance::invariance_residual(&k, &pair, &grid).unwrap();
        assert!(
            report.max_residual < RESIDUAL_TOL,
            "{} has residual {:e} at {:?}",
            report.mean,
            report.max_residual,
            report.witness
        );
        if report.max_residual > worst.0 {
            worst = (report.max_residual, report.mean);
        }
    }

    let geo = expr::mean_from_source("sqrt(x*y)", domain(), &grid).unwrap();
    let report = invariance::invariance_residual(&geo, &pair, &grid).unwrap();
    assert!(
        report.max_residual > NON_INVARIANT_FLOOR,
        "geometric residual {:e} is too small to separate",
        report.max_residual
    );
    let (wx, wy) = report.witness;
    let (sx, sy) = pair.step(wx, wy).unwrap();
    let recomputed = (geo.eval(wx, wy).unwrap() - geo.eval(sx, sy).unwrap()).abs();
    assert_eq!(
        recomputed, report.max_residual,
        "reported witness does not reproduce the reported residual"
    );
    println!(
        "criterion 5: PASS - {total} invariant candidates stay below {RESIDUAL_TOL:.0e} \
         (worst {:.3e} from {}); geometric fails at {:.3} with witness {:?}",
        worst.0, worst.1, report.max_residual, report.witness
    );
}

// Criterion 6: every invariant candidate is squeezed between the lower and
// upper envelope limits, and the two extreme closed forms attain them.
#[test]
fn criterion_6_invariant_candidates_sit_between_the_envelope_limits() {
    let pair = pair31();
    let grid = GridSpec::default();
    let policy = ConvergencePolicy::default();
    let candidates = invariant_candidates(&pair);
    let report = invariance::ordering_check(&pair, &candidates, &grid, &policy).unwrap();
    assert!(
        report.excluded.is_empty(),
        "candidates excluded as non-invariant: {:?}",
        report
            .excluded
            .iter()
            .map(|e| (e.name.as_str(), e.max_residual))
            .collect::<Vec<_>>()
    );
    assert_eq!(report.approximate_points, 0);
    assert!(report.all_within);
    for c in &report.included {
        assert!(
            c.max_below_lower < RESIDUAL_TOL && c.max_above_upper < RESIDUAL_TOL,
            "{} escapes the envelope: {:e} below, {:e} above",
            c.name,
            c.max_below_lower,
            c.max_above_upper
        );
    }
    let find = |name: &str| {
        report
            .included
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("candidate {name} missing from the report"))
    };
    assert!(
        find("step:-1").attains_lower,
        "the -1 shift does not attain the lower limit"
    );
    assert!(
        find("step:1").attains_upper,
        "the +1 shift does not attain the upper limit"
    );
    println!(
        "criterion 6: PASS - all {} invariant candidates satisfy lo <= K <= up within \
         {RESIDUAL_TOL:.0e} on {} grid points; step:-1 attains lo and step:1 attains up",
        report.included.len(),
        report.grid_size
    );
}

// Criterion 7: the arithmetic/geometric pair is the classical sanity case:
// lo, up and the staged value all collapse to the value an independent
// in-test iteration produces.
#[test]
fn criterion_7_agm_pair_collapses_lo_up_tr_to_one_value() {
    let d = Interval::new(1.0, 2.0).unwrap();
    let pair = MeanPair::new(
        Mean::builtin(MeanKind::Arithmetic, d).unwrap(),
        Mean::builtin(MeanKind::Geometric, d).unwrap(),
    )
    .unwrap();
    let lu = orbit::lower_upper(&pair, 1.0, 2.0, &ConvergencePolicy::default()).unwrap();
    assert!(lu.converged);
    let report =
        transfinite::transfinite_iterate(&pair, 1.0, 2.0, &StagePolicy::default()).unwrap();
    assert!(!report.approximate());

    // Independent oracle: the plain two-sequence iteration, run to 1e-15.
    let (mut a, mut b) = (1.0f64, 2.0f64);
    while (a - b).abs() > 1e-15 {
        (a, b) = (0.5 * (a + b), (a * b).sqrt());
    }
    let oracle = 0.5 * (a + b);

    for (label, v) in [("lo", lu.lo), ("up", lu.up), ("tr", report.tr_value)] {
        assert!(
            (v - oracle).abs() <= EXACT_TOL,
            "{label} = {v:.17} but the oracle gives {oracle:.17}"
        );
    }
    assert!((lu.lo - lu.up).abs() <= EXACT_TOL);
    assert!((lu.lo - report.tr_value).abs() <= EXACT_TOL);
    assert!((lu.up - report.tr_value).abs() <= EXACT_TOL);
    println!(
        "criterion 7: PASS - lo/up/tr of the arithmetic-geometric pair agree pairwise and \
         match the independent iteration value {oracle:.16} within 1e-12"
    );
}

// Criterion 8: the shift-by-two and sandwich laws hold exactly (no
// tolerance) for liminf, limsup and six weighted functionals on the
// 20-sequence family, and the weights are separated by a probe sequence.
#[test]
fn criterion_8_tail_functional_laws_hold_exactly_and_weights_separate() {
    let family: Vec<EventuallyPeriodic> = limitlike::standard_test_family();
    assert_eq!(family.len(), 20);

    let weights = ["0", "1", "x", "x*x", "1 - x", "x*x*(3 - 2*x)"];
    let mut functionals = vec![TailFunctional::Liminf, TailFunctional::Limsup];
    for w in weights {
        functionals.push(TailFunctional::Weighted(WeightFn::parse(w).unwrap()));
    }
    for f in &functionals {
        let report = limitlike::check_tail_laws(f, &family).unwrap();
        assert!(
            report.all_hold(),
            "{} violates a law: {:?}",
            report.functional,
            report.violations
        );
        assert_eq!(report.sequences_checked, 20);
    }

    // On the 4-periodic probe 0, 0.3, 0, 1, ... the normalized weight
    // argument is exactly 0.3, so phi_w = w(0.3): distinct weights must
    // give distinct values.
    let probe = limitlike::probe_sequence(0.3).unwrap();
    assert_eq!(TailFunctional::Liminf.apply_exact(&probe).unwrap(), 0.0);
    assert_eq!(TailFunctional::Limsup.apply_exact(&probe).unwrap(), 1.0);
    let values: Vec<f64> = functionals[2..]
        .iter()
        .map(|f| f.apply_exact(&probe).unwrap())
        .collect();
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            assert_ne!(
                values[i], values[j],
                "weights `{}` and `{}` coincide on the probe",
                weights[i], weights[j]
            );
        }
    }
    println!(
        "criterion 8: PASS - shift-by-two and sandwich laws hold exactly for 8 functionals \
         on 20 sequences; the 6 weights give 6 distinct values on the probe"
    );
}

// Criterion 9: for symmetric pairs the meet/join form is not an
// approximation but the same computation - lower/upper/staged values must
// agree bit for bit, not merely within tolerance.
#[test]
fn criterion_9_symmetric_pairs_match_their_meet_join_form_bit_for_bit() {
    let d = domain();
    let grid = GridSpec::lattice(31);
    let mid = "(x + y)/2";
    let sources: [(&str, &str); 5] = [
        ("(x + y)/2 + abs(x - y)*(abs(x - y) - 5)/25", mid),
        ("(x + y)/2 + abs(x - y)*(abs(x - y) - 3)/20", mid),
        (
            "(x + y)/2 + abs(x - y)*(abs(x - y) - 5)/25",
            "(x + y)/2 - abs(x - y)*(abs(x - y) - 5)/25",
        ),
        (
            "(x + y)/2 + abs(x - y)*(abs(x - y) - 2)*(abs(x - y) - 8)/100",
            mid,
        ),
        (
            "(x + y)/2 + abs(x - y)*(abs(x - y) - 5)/25",
            "(x + y)/2 + abs(x - y)*(5 - abs(x - y))/30",
        ),
    ];
    let policy = ConvergencePolicy::default();
    let stages = StagePolicy::default();
    let probes = [
        (0.0, 10.0),
        (1.25, 7.5),
        (9.5, 0.25),
        (3.0, 4.0),
        (0.5, 0.75),
        (8.0, 2.0),
    ];
    for (i, (ms, ns)) in sources.iter().enumerate() {
        let m = expr::mean_from_source(ms, d, &grid).unwrap();
        let n = expr::mean_from_source(ns, d, &grid).unwrap();
        let pair = MeanPair::new(m, n).unwrap();
        assert!(pair.symmetric(), "pair {i} is not symmetric");
        assert!(!pair.comparable_le());
        // Genuinely non-comparable: the difference must change sign.
        let (mut above, mut below) = (false, false);
        for (x, y) in grid.pairs(&d).unwrap() {
            let diff = pair.m().eval(x, y).unwrap() - pair.n().eval(x, y).unwrap();
            above |= diff > 0.0;
            below |= diff < 0.0;
        }
        assert!(above && below, "pair {i} never crosses; it is comparable");

        let sorted = meet_join(&pair);
        for &(x, y) in &probes {
            let direct = orbit::lower_upper(&pair, x, y, &policy).unwrap();
            let via = orbit::lower_upper(&sorted, x, y, &policy).unwrap();
            assert_eq!(
                direct.lo.to_bits(),
                via.lo.to_bits(),
                "lo differs for pair {i} at ({x}, {y}): {} vs {}",
                direct.lo,
                via.lo
            );
            assert_eq!(
                direct.up.to_bits(),
                via.up.to_bits(),
                "up differs for pair {i} at ({x}, {y}): {} vs {}",
                direct.up,
                via.up
            );
            assert_eq!(direct.converged, via.converged);

            let td = transfinite::transfinite_iterate(&pair, x, y, &stages).unwrap();
            let tv = transfinite::transfinite_iterate(&sorted, x, y, &stages).unwrap();
            assert_eq!(
                td.tr_value.to_bits(),
                tv.tr_value.to_bits(),
                "tr differs for pair {i} at ({x}, {y}): {} vs {}",
                td.tr_value,
                tv.tr_value
            );
            assert!(td.terminated_diagonal && tv.terminated_diagonal);
        }
    }
    println!(
        "criterion 9: PASS - lo/up/tr of 5 symmetric non-comparable pairs equal their \
         meet/join forms bit for bit at 6 starts each"
    );
}

// Criterion 10: fuzzed orbits never violate the envelope invariants, and
// the expression parser neither panics nor hangs on arbitrary input.
#[test]
fn criterion_10_fuzzed_orbits_and_parser_inputs_hold_the_invariants() {
    let d = domain();
    let grid = GridSpec::lattice(21);
    let crossing = MeanPair::new(
        expr::mean_from_source("(x + y)/2 + abs(x - y)*(abs(x - y) - 5)/25", d, &grid).unwrap(),
        expr::mean_from_source(mid_source(), d, &grid).unwrap(),
    )
    .unwrap();
    let pool: Vec<MeanPair> = vec![
        pair31(),
        MeanPair::new(
            Mean::builtin(MeanKind::Arithmetic, d).unwrap(),
            Mean::builtin(MeanKind::Power(2.0), d).unwrap(),
        )
        .unwrap(),
        MeanPair::new(
            Mean::builtin(MeanKind::Min, d).unwrap(),
            Mean::builtin(MeanKind::Max, d).unwrap(),
        )
        .unwrap(),
        MeanPair::new(step_mean(-1.0, d).unwrap(), step_mean(1.0, d).unwrap()).unwrap(),
        MeanPair::new(
            expr::mean_from_source("sqrt(x*y)", d, &grid).unwrap(),
            expr::mean_from_source(mid_source(), d, &grid).unwrap(),
        )
        .unwrap(),
        meet_join(&crossing),
    ];
    let policy = ConvergencePolicy::new(1e-10, 300).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x656e7673);
    let mut violations = 0usize;
    for _ in 0..10_000 {
        let pair = &pool[rng.gen_range(0..pool.len())];
        let x = rng.gen_range(0.0..=10.0);
        let y = rng.gen_range(0.0..=10.0);
        let trace = match orbit::iterate(pair, x, y, &policy) {
            Ok(t) => t,
            Err(e) => {
                // iterate itself polices containment; an error here is a
                // violation, not a test bug
                eprintln!("containment rejected inside iterate from ({x}, {y}): {e}");
                violations += 1;
                continue;
            }
        };
        let rows = trace.pairs();
        for w in rows.windows(2) {
            let (lo, hi) = (w[0].0.min(w[0].1), w[0].0.max(w[0].1));
            let (nlo, nhi) = (w[1].0.min(w[1].1), w[1].0.max(w[1].1));
            let contained = lo <= w[1].0 && w[1].0 <= hi && lo <= w[1].1 && w[1].1 <= hi;
            let monotone = nlo >= lo && nhi <= hi;
            if !contained || !monotone {
                eprintln!("envelope broke from ({x}, {y}): [{lo}, {hi}] -> [{nlo}, {nhi}]");
                violations += 1;
            }
        }
    }
    assert_eq!(violations, 0, "{violations} envelope violations");

    let charset: Vec<char> = "xy0123456789.+-*/(), sqrtabsminmaxpow^e%\t\u{221e}"
        .chars()
        .collect();
    let nasty = [
        "",
        "(",
        ")",
        "pow(x,",
        "pow(x, 0.5)",
        "1e999",
        "x**y",
        ".",
        "-",
        "--x",
        "min(x)",
        "min(x, y, x, y, 1, 2, 3)",
        "((((((((((((((((((((((((((((((((x))))))))))))))))))))))))))))))))",
        "sqrt(sqrt(sqrt(sqrt(sqrt(sqrt(sqrt(sqrt(x))))))))",
        "x/0",
        "0/0",
        "pow(0, -1)",
        "pow(-8, 0.5)",
        "\u{0}\u{1}\u{2}",
    ];
    let mut parsed_ok = 0usize;
    let mut tried = 0usize;
    for s in nasty {
        tried += 1;
        if let Ok(e) = expr::parse(s) {
            parsed_ok += 1;
            let _ = e.eval(2.0, 3.0);
        }
    }
    while tried < 100_000 {
        tried += 1;
        let len = rng.gen_range(0..=48);
        let s: String = (0..len)
            .map(|_| charset[rng.gen_range(0..charset.len())])
            .collect();
        if let Ok(e) = expr::parse(&s) {
            parsed_ok += 1;
            let _ = e.eval(2.0, 3.0);
        }
    }
    assert!(parsed_ok > 0, "the fuzz never produced a parsable input");
    println!(
        "criterion 10: PASS - 10000 fuzzed orbits kept envelope monotonicity and containment; \
         100000 parser inputs returned without abnormal termination ({parsed_ok} parsed)"
    );
}

/// The shared midpoint source used by several fuzz pairs.
fn mid_source() -> &'static str {
    "(x + y)/2"
}
