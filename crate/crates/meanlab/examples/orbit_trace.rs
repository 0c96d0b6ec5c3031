//! Gauss iteration of the example pair, watched closely: the orbit rows,
//! the conserved coordinate sum, and the two-sided gap law — wide starts
//! settle at gap 1, narrow starts collapse to gap 0.
//!
//! Run with: cargo run --example orbit_trace

use meanlab::mean::example_pair;
use meanlab::orbit::{self, ConvergencePolicy};
use meanlab::Interval;

fn main() -> meanlab::Result<()> {
    let pair = example_pair(Interval::new(0.0, 10.0)?)?;
    let policy = ConvergencePolicy::default();

    for (x, y) in [(0.0, 9.0), (4.0, 4.8)] {
        let trace = orbit::iterate(&pair, x, y, &policy)?;
        println!(
            "orbit from ({x}, {y}): {} steps, converged = {}",
            trace.steps(),
            trace.converged()
        );
        println!("  n    x_n           y_n           gap           x_n + y_n");
        for (n, &(a, b)) in trace.pairs().iter().enumerate().take(6) {
            println!(
                "  {n:<4} {a:<13.9} {b:<13.9} {:<13.9} {:.12}",
                (a - b).abs(),
                a + b
            );
        }
        let (a, b) = trace.final_pair();
        println!(
            "  ...  final pair ({a:.12}, {b:.12}), final gap {:.3e}\n",
            trace.final_gap()
        );
    }

    // The interleaved view x_0, y_0, x_1, y_1, ... is what the tail
    // functionals consume.
    let trace = orbit::iterate(&pair, 0.0, 3.0, &policy)?;
    let flat = orbit::interleave(&trace);
    println!(
        "interleaved head of the (0, 3) orbit: {:?}",
        &flat[..8.min(flat.len())]
    );

    // Starving the step budget flags the trace instead of guessing.
    let starved = orbit::iterate(&pair, 0.0, 9.0, &ConvergencePolicy::new(1e-12, 3)?)?;
    println!(
        "with max_steps = 3: converged = {}, final gap = {:.6}",
        starved.converged(),
        starved.final_gap()
    );
    Ok(())
}
