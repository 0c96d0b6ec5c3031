//! Symmetric but non-comparable pairs: neither M <= N nor N <= M holds,
//! yet the meet/join pair (pointwise min, pointwise max) generates the same
//! unordered orbits — so lower/upper/staged values are computed through it
//! and agree bit for bit with the direct call. Pairs that are neither
//! comparable nor symmetric are rejected by the staged engine.
//!
//! Run with: cargo run --example symmetric_pairs

use meanlab::expr;
use meanlab::mean::{meet_join, Mean, MeanKind, MeanPair};
use meanlab::orbit::{lower_upper, ConvergencePolicy};
use meanlab::transfinite::{transfinite_iterate, StagePolicy};
use meanlab::{GridSpec, Interval};

fn main() -> meanlab::Result<()> {
    let d = Interval::new(0.0, 10.0)?;
    let grid = GridSpec::lattice(31);

    // M sits above the midpoint for gaps beyond 5 and below it for smaller
    // gaps, so (M, midpoint) crosses: genuinely non-comparable.
    let m = expr::mean_from_source("(x + y)/2 + abs(x - y)*(abs(x - y) - 5)/25", d, &grid)?;
    let n = expr::mean_from_source("(x + y)/2", d, &grid)?;
    let pair = MeanPair::new(m, n)?;
    println!(
        "pair: symmetric = {}, comparable flag = {}",
        pair.symmetric(),
        pair.comparable_le()
    );
    println!(
        "crossing: M - N = {:+.4} at gap 2, {:+.4} at gap 8",
        pair.m().eval(4.0, 6.0)? - pair.n().eval(4.0, 6.0)?,
        pair.m().eval(1.0, 9.0)? - pair.n().eval(1.0, 9.0)?
    );

    let sorted = meet_join(&pair);
    let policy = ConvergencePolicy::default();
    let stages = StagePolicy::default();
    println!("\nstart        direct lo/up/tr              via meet_join               bit-equal");
    for (x, y) in [(0.0, 10.0), (1.25, 7.5), (8.0, 2.0)] {
        let a = lower_upper(&pair, x, y, &policy)?;
        let b = lower_upper(&sorted, x, y, &policy)?;
        let ta = transfinite_iterate(&pair, x, y, &stages)?;
        let tb = transfinite_iterate(&sorted, x, y, &stages)?;
        let equal = a.lo.to_bits() == b.lo.to_bits()
            && a.up.to_bits() == b.up.to_bits()
            && ta.tr_value.to_bits() == tb.tr_value.to_bits();
        println!(
            "({x:>4}, {y:>4}) {:.6}/{:.6}/{:.6}  {:.6}/{:.6}/{:.6}  {equal}",
            a.lo, a.up, ta.tr_value, b.lo, b.up, tb.tr_value
        );
    }

    // Asymmetric and non-comparable: the staged engine refuses to guess.
    // (x + 0.3*(y - x) is the weighted average written so the diagonal is
    // exact in floating point; swapping the arguments moves the weight.)
    let skew = MeanPair::new(
        expr::mean_from_source("x + 0.3*(y - x)", d, &grid)?,
        Mean::builtin(MeanKind::Arithmetic, d)?,
    )?;
    match transfinite_iterate(&skew, 1.0, 9.0, &stages) {
        Err(e) => println!("\nasymmetric non-comparable pair rejected: {e}"),
        Ok(_) => unreachable!("the staged engine must reject this pair"),
    }
    Ok(())
}
