//! User-defined means through the expression language: parsing, the
//! grid-gated lift to a checked mean, rejection of non-means, piecewise
//! definitions, and weight functions for tail functionals.
//!
//! Run with: cargo run --example dsl_means

use meanlab::expr::{self, WeightFn};
use meanlab::{GridSpec, Interval};

fn main() -> meanlab::Result<()> {
    let d = Interval::new(0.0, 10.0)?;
    let grid = GridSpec::lattice(31);

    // Accepted: midpoint, a root-mean-square, and a piecewise mean that
    // branches on the gap (the same shape as the built-in example pair).
    for src in [
        "(x + y)/2",
        "sqrt((x*x + y*y)/2)",
        "if abs(x - y) <= 1 then (x + y)/2 else (x + y - sqrt(abs(x - y)))/2",
    ] {
        let mean = expr::mean_from_source(src, d, &grid)?;
        let p = mean.properties();
        println!(
            "accepted: {src}\n  value(0, 9) = {:.6}, symmetric = {}, strict = {}",
            mean.eval(0.0, 9.0)?,
            p.symmetric,
            p.strict
        );
    }

    // Rejected: x + y escapes [min, max] everywhere off the diagonal. The
    // error carries the witness point.
    match expr::mean_from_source("x + y", d, &grid) {
        Err(e) => println!("rejected: x + y\n  {e}"),
        Ok(_) => unreachable!("x + y is not a mean"),
    }

    // Syntax errors come back with positions, never panics.
    match expr::parse("pow(x, ") {
        Err(e) => println!("syntax error: {e}"),
        Ok(_) => unreachable!(),
    }

    // Weight functions are one-variable maps [0, 1] -> [0, 1], range-checked
    // at every call; they parameterize the weighted tail functionals.
    let w = WeightFn::parse("x*x*(3 - 2*x)")?;
    println!("weight {} at 0.25 = {}", w.source(), w.eval(0.25)?);
    match WeightFn::parse("x + 1") {
        Ok(w) => match w.eval(0.5) {
            Err(e) => println!("weight range gate: {e}"),
            Ok(_) => unreachable!(),
        },
        Err(e) => println!("{e}"),
    }
    Ok(())
}
