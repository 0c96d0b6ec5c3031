//! The verification side: measure invariance residuals of candidate means
//! under a pair, order the invariant ones against the envelope limits, and
//! watch a non-invariant classical mean fail with a concrete witness.
//!
//! Run with: cargo run --example invariance_checks

use meanlab::expr;
use meanlab::invariance::{invariance_residual, ordering_check, RESIDUAL_TOL};
use meanlab::limitlike::{orbit_mean, TailFunctional};
use meanlab::mean::{example_pair, step_mean};
use meanlab::orbit::ConvergencePolicy;
use meanlab::transfinite::{transfinite_mean, StagePolicy};
use meanlab::{GridSpec, Interval};

fn main() -> meanlab::Result<()> {
    let d = Interval::new(0.0, 10.0)?;
    let pair = example_pair(d)?;
    let grid = GridSpec::lattice(41);
    let policy = ConvergencePolicy::default();

    // A family of candidates that should be invariant: tail-functional
    // means, the staged mean, and the closed-form step family.
    let candidates = vec![
        orbit_mean(&pair, TailFunctional::Liminf, policy)?,
        orbit_mean(&pair, TailFunctional::Limsup, policy)?,
        transfinite_mean(&pair, &StagePolicy::default())?,
        step_mean(-1.0, d)?,
        step_mean(0.0, d)?,
        step_mean(1.0, d)?,
    ];
    println!("invariance residuals on a 41x41 grid (tolerance {RESIDUAL_TOL:.0e}):");
    for k in &candidates {
        let r = invariance_residual(k, &pair, &grid)?;
        println!(
            "  {:<44} residual {:.3e}  invariant = {}",
            r.mean,
            r.max_residual,
            r.max_residual < RESIDUAL_TOL
        );
    }

    // The geometric mean is not invariant under this pair; the report says
    // where it fails worst.
    let geo = expr::mean_from_source("sqrt(x*y)", d, &grid)?;
    let r = invariance_residual(&geo, &pair, &grid)?;
    println!(
        "  {:<44} residual {:.3}    at witness {:?}",
        r.mean, r.max_residual, r.witness
    );

    // Ordering: every invariant candidate must sit between the lower and
    // upper envelope limits; the extreme step means attain them.
    let report = ordering_check(&pair, &candidates, &grid, &policy)?;
    println!(
        "\nordering on {} grid points: all within bounds = {}, excluded = {}",
        report.grid_size,
        report.all_within,
        report.excluded.len()
    );
    for c in &report.included {
        println!(
            "  {:<44} attains lower = {:<5} attains upper = {}",
            c.name, c.attains_lower, c.attains_upper
        );
    }
    Ok(())
}
