//! Tail functionals: liminf, limsup, and weighted blends between them.
//! Applied to interleaved orbits they produce invariant means; on
//! eventually periodic sequences their defining laws are checked exactly.
//!
//! Run with: cargo run --example tail_functionals

use meanlab::expr::WeightFn;
use meanlab::limitlike::{
    check_tail_laws, orbit_mean, probe_sequence, standard_test_family, tail_bounds, TailFunctional,
};
use meanlab::mean::example_pair;
use meanlab::orbit::ConvergencePolicy;
use meanlab::Interval;

fn main() -> meanlab::Result<()> {
    let pair = example_pair(Interval::new(0.0, 10.0)?)?;
    let policy = ConvergencePolicy::default();

    // Orbit means: apply a functional to x_0, y_0, x_1, y_1, ... The
    // liminf/limsup ends reproduce the envelope limits; weights interpolate.
    let functionals = [
        TailFunctional::Liminf,
        TailFunctional::Weighted(WeightFn::parse("x")?),
        TailFunctional::Weighted(WeightFn::parse("x*x")?),
        TailFunctional::Limsup,
    ];
    println!("invariant means from tail functionals, evaluated at (0, 9):");
    for f in functionals {
        let mean = orbit_mean(&pair, f, policy)?;
        println!("  {:<40} = {:.9}", mean.name(), mean.eval(0.0, 9.0)?);
    }

    // Window estimates carry an exactness flag: a window that repeats with
    // period <= window/2 provably contains a full cycle.
    let seq: Vec<f64> = [0.0, 0.25, 0.0, 1.0].repeat(10);
    let est = tail_bounds(&seq, 12)?;
    println!(
        "\ntail bounds of the 4-periodic sequence from a 12-window: \
         [{}, {}], exact = {}",
        est.liminf_est, est.limsup_est, est.exact
    );

    // The two laws every 2-limit-like functional must satisfy - invariance
    // under dropping two entries, and the liminf/limsup sandwich - are
    // checked with zero tolerance on 20 eventually periodic sequences.
    let family = standard_test_family();
    for f in [
        TailFunctional::Liminf,
        TailFunctional::Limsup,
        TailFunctional::Weighted(WeightFn::parse("1 - x")?),
    ] {
        let report = check_tail_laws(&f, &family)?;
        println!(
            "laws for {:<8} on {} sequences: all hold = {}",
            report.functional,
            report.sequences_checked,
            report.all_hold()
        );
    }

    // Distinct weights give distinct functionals: on the 4-periodic probe
    // 0, t, 0, 1, ... the weighted value is exactly w(t).
    let probe = probe_sequence(0.3)?;
    print!("probe values for weights 0.3 -> ");
    for w in ["x", "x*x", "1 - x"] {
        let f = TailFunctional::Weighted(WeightFn::parse(w)?);
        print!("{w}: {}  ", f.apply_exact(&probe)?);
    }
    println!();
    Ok(())
}
