use crate::expr::{EvalError, ParseError};
use crate::interval::Interval;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building means, iterating orbits, or
/// running checks. Construction errors are contract violations (bad domains,
/// out-of-range parameters); evaluation errors carry the offending point.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid interval: lo = {lo}, hi = {hi} (need finite lo < hi)")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("domain {domain} incompatible with {mean}: {reason}")]
    DomainIncompatible {
        mean: String,
        domain: Interval,
        reason: String,
    },

    #[error("parameter {name} = {value} outside [{min}, {max}]")]
    ParameterRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid policy: {0}")]
    InvalidPolicy(String),

    #[error("means live on different domains: {left} vs {right}")]
    DomainMismatch { left: Interval, right: Interval },

    #[error("point ({x}, {y}) outside domain {domain}")]
    OutsideDomain { x: f64, y: f64, domain: Interval },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("evaluating at ({x}, {y}): {source}")]
    Eval {
        x: f64,
        y: f64,
        #[source]
        source: EvalError,
    },

    #[error("{name} violates mean bounds at ({x}, {y}): value {value} outside [{lo}, {hi}]")]
    MeanBounds {
        name: String,
        x: f64,
        y: f64,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("orbit step {step}: {source}")]
    OrbitStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("sample grid is empty or degenerate: {0}")]
    BadGrid(String),

    #[error("window {window} invalid for sequence of length {len} (need 1 <= window <= len)")]
    BadWindow { window: usize, len: usize },

    #[error("sequence too short for tail statistics (length {len})")]
    SequenceTooShort { len: usize },

    #[error("weight function must use only the variable x (found y)")]
    WeightUsesY,

    #[error("weight output w({arg}) = {value} outside [0, 1]")]
    WeightRange { arg: f64, value: f64 },

    #[error("orbit did not converge within {max_steps} steps (final gap {final_gap})")]
    NoConvergence { max_steps: usize, final_gap: f64 },

    #[error("pair is neither flagged comparable nor symmetric; staged iteration undefined")]
    PairNotApplicable,

    #[error("pair must be symmetric for this check")]
    PairNotSymmetric,

    #[error("stage index must be >= 1")]
    BadStage,

    #[error("eventually periodic sequence needs a nonempty cycle of finite values")]
    BadCycle,

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
