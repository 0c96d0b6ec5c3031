//! Decomposing invariant functions through the staged mean: any function
//! Φ with Φ = Φ∘(M, N) should factor as Φ = f ∘ Tr with f read off the
//! diagonal, f(t) = Φ(t, t). The check measures each step of that argument
//! and cross-checks the inverse when f is strictly monotone.
//!
//! Run with: cargo run --example functional_equation

use meanlab::expr;
use meanlab::invariance::decomposition_check;
use meanlab::mean::example_pair;
use meanlab::transfinite::StagePolicy;
use meanlab::{GridSpec, Interval};

fn print_report(label: &str, r: &meanlab::invariance::DecompositionReport) {
    println!("{label}:");
    println!(
        "  (a) invariance residual  {:.3e}  holds = {}",
        r.invariance_residual, r.invariance_holds
    );
    println!("  (b) diagonal samples     {}", r.diagonal_samples);
    println!(
        "  (c) composition residual {:.3e}  holds = {}",
        r.composition_residual, r.composition_holds
    );
    if r.inverse_checked {
        println!(
            "  (d) inverse residual     {:.3e}  holds = {}",
            r.inverse_residual.unwrap(),
            r.inverse_holds.unwrap()
        );
    } else {
        println!(
            "  (d) inverse skipped: {}",
            r.inverse_skip_reason.as_deref().unwrap_or("(no reason)")
        );
    }
}

fn main() -> meanlab::Result<()> {
    let d = Interval::new(0.0, 10.0)?;
    let pair = example_pair(d)?;
    let grid = GridSpec::lattice(31);
    let stages = StagePolicy::default();

    // The coordinate sum is invariant (the pair conserves it), and on the
    // diagonal it reads f(t) = 2t — strictly monotone, so all four steps
    // run, including the bisection inverse.
    let phi = expr::parse("x + y").expect("valid source");
    print_report(
        "phi = x + y",
        &decomposition_check(&phi, &pair, &grid, &stages)?,
    );

    // A nonlinear function of the sum is still invariant; f(t) = (2t)^2 on
    // [0, 10] is monotone too.
    let phi = expr::parse("(x + y)*(x + y)").expect("valid source");
    print_report(
        "\nphi = (x + y)^2",
        &decomposition_check(&phi, &pair, &grid, &stages)?,
    );

    // A constant is trivially invariant but f is not injective; step (d)
    // is skipped with a reason instead of dividing by zero somewhere.
    let phi = expr::parse("7").expect("valid source");
    print_report(
        "\nphi = 7",
        &decomposition_check(&phi, &pair, &grid, &stages)?,
    );

    // A non-invariant Φ fails at step (a) and the composition step shows
    // how far from factoring it is.
    let phi = expr::parse("x*y").expect("valid source");
    print_report(
        "\nphi = x*y",
        &decomposition_check(&phi, &pair, &grid, &stages)?,
    );
    Ok(())
}
