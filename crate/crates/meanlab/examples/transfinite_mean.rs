//! Staged iteration past the first limit: run the orbit to stabilization
//! (a limit stage), take one successor step, and repeat until the pair is
//! diagonal. For the example pair one limit stage plus one successor step
//! always suffices, and the resulting value is the distinguished invariant
//! mean between the envelope limits.
//!
//! Run with: cargo run --example transfinite_mean

use meanlab::expr;
use meanlab::mean::{example_pair, MeanPair};
use meanlab::transfinite::{
    continuity_probe, stage_mean, transfinite_iterate, StagePolicy, StageSide,
};
use meanlab::{GridSpec, Interval};

fn main() -> meanlab::Result<()> {
    let pair = example_pair(Interval::new(0.0, 10.0)?)?;
    let stages = StagePolicy::default();

    let report = transfinite_iterate(&pair, 0.0, 3.0, &stages)?;
    println!("staged run from (0, 3):");
    println!("  limit stages used   = {}", report.limit_stages_used);
    println!("  stage pairs         = {:?}", report.stage_pairs);
    println!("  successor pairs     = {:?}", report.successor_pairs);
    println!("  termination         = {:?}", report.termination);
    println!("  final pair          = {:?}", report.final_pair);
    println!("  staged value        = {}", report.tr_value);
    println!("  approximate         = {}", report.approximate());

    // Stage means expose the per-stage components as means of their own:
    // stage 1 gives the envelope limits, the diagonal stage gives the
    // staged value on both sides.
    let first_lower = stage_mean(&pair, 1, StageSide::Lower, &stages)?;
    let first_upper = stage_mean(&pair, 1, StageSide::Upper, &stages)?;
    println!(
        "\nstage 1 components at (0, 3): lower = {:.9}, upper = {:.9}",
        first_lower.eval(0.0, 3.0)?,
        first_upper.eval(0.0, 3.0)?
    );

    // A continuity probe of the staged value. For this pair it finds no
    // jump: the pair conserves x + y, so its staged value is the plain
    // midpoint — continuous even though the pair itself is not.
    let probe = continuity_probe(&pair, 201, &stages)?;
    println!(
        "\ncontinuity probe of the staged value, {} axis nodes (spacing {:.3}):",
        probe.axis_points, probe.spacing
    );
    println!(
        "  max jump {:.6} vs threshold {:.6}: jump detected = {}",
        probe.max_jump, probe.threshold, probe.jump_detected
    );

    // Pair a jumpy mean with itself and the staged value inherits its
    // discontinuity; the same probe now fires, with a witness pair of
    // neighboring sample points.
    let jumpy = expr::mean_from_source(
        "if abs(x - y) <= 2 then (x + y)/2 else min(x, y)",
        Interval::new(0.0, 10.0)?,
        &GridSpec::lattice(31),
    )?;
    let diag = MeanPair::new(jumpy.clone(), jumpy)?;
    let probe = continuity_probe(&diag, 201, &stages)?;
    println!("probe of the staged value of the (jumpy, jumpy) pair:");
    println!(
        "  max jump {:.6} at {:?}: jump detected = {}",
        probe.max_jump, probe.witness, probe.jump_detected
    );
    Ok(())
}
