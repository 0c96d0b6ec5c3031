//! meanlab — a numeric laboratory for invariant means of two-variable mean
//! pairs, including discontinuous ones.
//!
//! A mean K is *invariant* under a pair (M, N) when K(x, y) =
//! K(M(x, y), N(x, y)) everywhere — the arithmetic–geometric mean is the
//! classical example. When M and N are allowed to jump, invariant means stop
//! being unique or continuous, and this crate exists to measure what remains:
//!
//! - [`mean`]: means as checked evaluation functions, built-in families
//!   (classical means, a piecewise demonstration pair, a step family of its
//!   invariant means), meet/join and convex combination. ([`Mean`],
//!   [`MeanPair`], [`example_pair`], [`step_mean`])
//! - [`expr`]: a small expression language for user-defined means and weight
//!   functions, with positioned errors and a grid-gated lift to [`Mean`].
//! - [`orbit`]: Gauss-type iteration (x, y) -> (M(x,y), N(x,y)) with
//!   replayable traces, envelope limits and interleaving.
//! - [`limitlike`]: tail functionals (liminf, limsup, and weighted blends
//!   between them) applied to orbits, producing invariant means; exact law
//!   checks on eventually periodic sequences.
//! - [`transfinite`]: staged iteration past the first limit — limit stages
//!   alternating with single successor steps — whose diagonal value is the
//!   distinguished invariant mean; plus a grid continuity probe.
//! - [`invariance`]: residual measurement, ordering against the envelope
//!   means, symmetry checks, and the decomposition of invariant functions
//!   through the staged mean.
//! - [`cli`]: the `eval` / `orbit` / `check` subcommands used by the thin
//!   binary; runnable walkthroughs live in `examples/`.

pub mod cli;
pub mod error;
pub mod expr;
pub mod grid;
pub mod interval;
pub mod invariance;
pub mod limitlike;
pub mod mean;
pub mod orbit;
pub mod properties;
pub mod transfinite;

pub use error::{Error, Result};
pub use grid::GridSpec;
pub use interval::Interval;
pub use mean::{
    convex_combine, example_pair, meet_join, step_mean, Mean, MeanKind, MeanPair, PropertySet,
};
