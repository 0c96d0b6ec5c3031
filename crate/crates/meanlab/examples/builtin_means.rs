//! Tour of the built-in means: the classical families, the piecewise
//! `example31` pair with its unit-gap jump, the step family of its invariant
//! means, and the meet/join and convex-combination combinators.
//!
//! Run with: cargo run --example builtin_means

use meanlab::mean::{convex_combine, example_pair, meet_join, step_mean, Mean, MeanKind, MeanPair};
use meanlab::properties::check_properties;
use meanlab::{GridSpec, Interval};

fn main() -> meanlab::Result<()> {
    let d = Interval::new(0.0, 10.0)?;

    // Classical one-liners. Geometric and harmonic need a positive domain.
    let pos = Interval::new(1.0, 2.0)?;
    for mean in [
        Mean::builtin(MeanKind::Arithmetic, d)?,
        Mean::builtin(MeanKind::Power(2.0), d)?,
        Mean::builtin(MeanKind::Geometric, pos)?,
        Mean::builtin(MeanKind::Harmonic, pos)?,
        Mean::builtin(MeanKind::Min, d)?,
    ] {
        let (lo, hi) = (mean.domain().lo(), mean.domain().hi());
        println!(
            "{:<12} on [{lo}, {hi}]: value at midpoint-ish args = {:.6}",
            mean.name(),
            mean.eval(lo, hi)?
        );
    }

    // The demonstration pair: midpoint when |x - y| <= 1, a sqrt-split
    // otherwise. Discontinuous on the |x - y| = 1 set, yet still a pair of
    // strict symmetric means with M <= N.
    let pair = example_pair(d)?;
    println!("\npair ({}, {}):", pair.m().name(), pair.n().name());
    for (x, y) in [(4.0, 4.5), (0.0, 3.0), (0.0, 9.0)] {
        let (mx, ny) = pair.step(x, y)?;
        println!("  ({x:>4}, {y:>4}) -> ({mx:.6}, {ny:.6})");
    }

    // Grid-checked properties of the pair: bounds, symmetry, strictness,
    // comparability, and the weak contraction |M - N| < |x - y|.
    let report = check_properties(&pair, &GridSpec::lattice(41))?;
    println!(
        "  properties on a 41x41 grid: all hold = {}",
        report.all_hold()
    );

    // Its invariant means come as a one-parameter step family: midpoint for
    // gaps <= 1, midpoint + c/2 beyond. The ends c = -1, 1 are the lower and
    // upper envelope limits; convex combinations stay invariant.
    let lo = step_mean(-1.0, d)?;
    let up = step_mean(1.0, d)?;
    let blend = convex_combine(&lo, &up, 0.25)?;
    println!("\nstep family at (0, 9):");
    for k in [&lo, &up, &blend] {
        println!("  {:<24} = {:.6}", k.name(), k.eval(0.0, 9.0)?);
    }

    // meet/join turns any symmetric pair into a comparable one with the
    // same unordered orbits.
    let rms = Mean::builtin(MeanKind::Power(2.0), d)?;
    let am = Mean::builtin(MeanKind::Arithmetic, d)?;
    let sorted = meet_join(&MeanPair::new(rms, am)?);
    println!(
        "\nmeet/join of (power(2), arithmetic): comparable = {}, step(2, 8) = {:?}",
        sorted.comparable_le(),
        sorted.step(2.0, 8.0)?
    );
    Ok(())
}
