//! The extreme invariant means: lower and upper envelope limits of the
//! orbit. For the example pair they have closed forms — midpoint shifted by
//! -1/2 and +1/2 once the gap exceeds 1 — which this example verifies on a
//! small sweep.
//!
//! Run with: cargo run --example lower_upper

use meanlab::mean::{example_pair, step_mean};
use meanlab::orbit::{self, ConvergencePolicy};
use meanlab::Interval;

fn main() -> meanlab::Result<()> {
    let d = Interval::new(0.0, 10.0)?;
    let pair = example_pair(d)?;
    let policy = ConvergencePolicy::default();
    let lo_form = step_mean(-1.0, d)?;
    let up_form = step_mean(1.0, d)?;

    println!("start        lo (orbit)      lo (form)       up (orbit)      up (form)");
    let mut worst = 0.0f64;
    for (x, y) in [
        (0.0, 3.0),
        (0.0, 9.0),
        (2.5, 7.0),
        (6.0, 6.9), // narrow: lo = up = midpoint
        (9.0, 1.0),
    ] {
        let lu = orbit::lower_upper(&pair, x, y, &policy)?;
        assert!(lu.converged);
        let lf = lo_form.eval(x, y)?;
        let uf = up_form.eval(x, y)?;
        worst = worst.max((lu.lo - lf).abs()).max((lu.up - uf).abs());
        println!(
            "({x:>4}, {y:>4}) {:<15.12} {lf:<15.12} {:<15.12} {uf:<15.12}",
            lu.lo, lu.up
        );
    }
    println!("worst deviation from the closed forms: {worst:.3e}");

    // The whole segment [lo, up] consists of invariant means; the step
    // family walks it. At (0, 9) the gap limit is 1, so the invariant
    // values at offset c form the segment [4, 5] around the midpoint 4.5.
    println!("\ninvariant values at (0, 9) as the offset walks [-1, 1]:");
    for c in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let k = step_mean(c, d)?;
        println!("  offset {c:>4}: {:.6}", k.eval(0.0, 9.0)?);
    }
    Ok(())
}
