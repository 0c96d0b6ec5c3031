//! Command-line front end: evaluate invariant-mean targets, export orbit
//! traces, and run verification reports.
//!
//! Three subcommands share one configuration surface:
//!
//! - `eval` prints a single number — an envelope limit (`lo`, `up`), the
//!   staged mean (`tr`), a tail-functional mean (`bo:liminf`, `bo:limsup`,
//!   `bo:w:<expr>`), or a stage pair component (`stage:<k>[:lower|:upper]`).
//! - `orbit` exports the raw trace as CSV (`n,x_n,y_n,gap`) or JSON; rows
//!   are printed with 17 significant digits so they replay bit-for-bit.
//! - `check` runs one verification suite (`properties`, `invariance`,
//!   `ordering`, `phi`, `uniqueness`, `limitlike`) and emits a JSON report.
//!
//! The pair under study is either named (`--pair example31`) or given as two
//! expressions (`--mean-m`, `--mean-n`, builtin names allowed). Every knob
//! can also live in a TOML file passed with `--config`; explicit flags
//! override file entries, and built-in defaults fill whatever remains. For a
//! fixed configuration the emitted files are byte-identical across runs.
//!
//! Exit codes: 0 for a converged value or an all-pass report, 2 for an
//! approximate value or a failed check, 1 for hard errors (bad flags,
//! unparsable expressions, out-of-domain starts, unwritable output).

use std::error::Error as _;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{self, WeightFn};
use crate::grid::{GridSpec, DEFAULT_SEED};
use crate::interval::Interval;
use crate::invariance::{self, RESIDUAL_TOL};
use crate::limitlike::{self, TailFunctional};
use crate::mean::{example_pair, Mean, MeanKind, MeanPair};
use crate::orbit::{self, ConvergencePolicy, OrbitTrace};
use crate::properties;
use crate::transfinite::{self, StagePolicy, StageSide, Termination};

/// Converged value / all checks passed.
pub const EXIT_OK: i32 = 0;
/// Invalid input or a hard failure.
pub const EXIT_ERROR: i32 = 1;
/// The value is approximate, or at least one check failed.
pub const EXIT_APPROXIMATE: i32 = 2;

/// Parse the process arguments, run one command, and return the exit code.
/// The thin binary wraps this in `std::process::exit`.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version arrive here too; those are not errors.
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = e.source();
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            EXIT_ERROR
        }
    };
    let _ = std::io::stdout().flush();
    code
}

#[derive(Parser, Debug)]
#[command(
    name = "meanlab",
    version,
    about = "Numeric laboratory for invariant means of two-variable mean pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an invariant-mean target at one starting pair.
    Eval(EvalArgs),
    /// Iterate the pair map from a starting pair and export the trace.
    Orbit(OrbitArgs),
    /// Run a verification suite and emit a JSON report.
    Check(CheckArgs),
}

/// Flags shared by every subcommand. All optional: a TOML file supplies
/// defaults for whatever is not given, and hard-coded defaults back both.
#[derive(Args, Debug, Default)]
struct CommonOpts {
    /// TOML configuration file; explicit flags override its entries.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Named built-in pair (available: example31).
    #[arg(long, conflicts_with_all = ["mean_m", "mean_n"])]
    pair: Option<String>,

    /// First mean: a builtin name (arithmetic, geometric, harmonic, min,
    /// max, power:<p>) or an expression in x and y.
    #[arg(long, requires = "mean_n", value_name = "MEAN")]
    mean_m: Option<String>,

    /// Second mean, same syntax as --mean-m.
    #[arg(long, requires = "mean_m", value_name = "MEAN")]
    mean_n: Option<String>,

    /// Domain endpoints (default: 0 10).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    domain: Option<Vec<f64>>,

    /// Gap below which a pair counts as converged (default 1e-12).
    #[arg(long)]
    gap_tol: Option<f64>,

    /// Step budget per orbit (default 100000).
    #[arg(long)]
    max_steps: Option<usize>,

    /// Stage budget for the staged iteration (default 64).
    #[arg(long)]
    max_limit_stages: Option<usize>,

    /// Tail window (entries) for bo: targets; default: a quarter of the
    /// trace, at least 16 entries.
    #[arg(long)]
    window: Option<usize>,

    /// Lattice points per axis for grid checks (default 101).
    #[arg(long)]
    grid_axis: Option<usize>,

    /// Extra seeded random pairs for grid checks (default 1000).
    #[arg(long)]
    grid_random: Option<usize>,

    /// Seed for the random grid pairs.
    #[arg(long)]
    seed: Option<u64>,

    /// Write output here instead of stdout.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// What to evaluate: lo | up | tr | bo:liminf | bo:limsup | bo:w:<expr>
    /// | stage:<k>[:lower|:upper].
    #[arg(long)]
    target: String,

    /// First coordinate of the starting pair.
    #[arg(long, allow_negative_numbers = true)]
    x: f64,

    /// Second coordinate of the starting pair.
    #[arg(long, allow_negative_numbers = true)]
    y: f64,

    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args, Debug)]
struct OrbitArgs {
    /// First coordinate of the starting pair.
    #[arg(long, allow_negative_numbers = true)]
    x: f64,

    /// Second coordinate of the starting pair.
    #[arg(long, allow_negative_numbers = true)]
    y: f64,

    /// Trace format: csv (default) or json.
    #[arg(long, value_enum)]
    format: Option<TraceFormat>,

    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Which verification suite to run.
    #[arg(value_enum)]
    kind: CheckKind,

    /// Candidate invariant mean (builtin name or expression). The
    /// invariance check takes exactly one; ordering accepts several.
    #[arg(long = "k", value_name = "MEAN")]
    candidates: Vec<String>,

    /// Two-variable expression for the phi decomposition check.
    #[arg(long, value_name = "EXPR")]
    phi: Option<String>,

    /// Tail functional for the limitlike check, repeatable:
    /// liminf | limsup | w:<expr>. Default: liminf and limsup.
    #[arg(long = "functional", value_name = "SPEC")]
    functionals: Vec<String>,

    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TraceFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Properties,
    Invariance,
    Ordering,
    Phi,
    Uniqueness,
    Limitlike,
}

/// The TOML configuration file mirrors the command-line flags one-to-one
/// (keys use underscores: `mean_m`, `gap_tol`, ...). Unknown keys are
/// rejected so typos fail loudly instead of silently using defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    pair: Option<String>,
    mean_m: Option<String>,
    mean_n: Option<String>,
    domain: Option<[f64; 2]>,
    gap_tol: Option<f64>,
    max_steps: Option<usize>,
    max_limit_stages: Option<usize>,
    window: Option<usize>,
    grid_axis: Option<usize>,
    grid_random: Option<usize>,
    seed: Option<u64>,
    format: Option<String>,
    output: Option<PathBuf>,
}

/// Fully resolved run configuration: flags over file over defaults.
#[derive(Debug)]
struct Resolved {
    pair: MeanPair,
    policy: ConvergencePolicy,
    stages: StagePolicy,
    window: Option<usize>,
    grid: GridSpec,
    format: TraceFormat,
    output: Option<PathBuf>,
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Orbit(args) => cmd_orbit(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn load_file(path: &Option<PathBuf>) -> Result<FileConfig> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)?;
            toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", p.display())))
        }
    }
}

fn resolve(common: &CommonOpts, format_flag: Option<TraceFormat>) -> Result<Resolved> {
    let file = load_file(&common.config)?;

    let domain = match (&common.domain, file.domain) {
        (Some(d), _) => Interval::new(d[0], d[1])?,
        (None, Some([lo, hi])) => Interval::new(lo, hi)?,
        (None, None) => Interval::new(0.0, 10.0)?,
    };

    let base = ConvergencePolicy::default();
    let policy = ConvergencePolicy {
        gap_tol: common.gap_tol.or(file.gap_tol).unwrap_or(base.gap_tol),
        max_steps: common
            .max_steps
            .or(file.max_steps)
            .unwrap_or(base.max_steps),
        store_cap: base.store_cap,
    };
    policy.validate()?;

    let stages = StagePolicy {
        inner: policy,
        max_limit_stages: common
            .max_limit_stages
            .or(file.max_limit_stages)
            .unwrap_or(StagePolicy::default().max_limit_stages),
    };
    stages.validate()?;

    let window = common.window.or(file.window);
    if window == Some(0) {
        return Err(Error::Config("window must be positive".into()));
    }

    let base_grid = GridSpec::default();
    let grid = GridSpec {
        axis_points: common
            .grid_axis
            .or(file.grid_axis)
            .unwrap_or(base_grid.axis_points),
        random_pairs: common
            .grid_random
            .or(file.grid_random)
            .unwrap_or(base_grid.random_pairs),
        seed: common.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
    };

    let format = match format_flag {
        Some(f) => f,
        None => match file.format.as_deref() {
            None | Some("csv") => TraceFormat::Csv,
            Some("json") => TraceFormat::Json,
            Some(other) => {
                return Err(Error::Config(format!(
                    "unknown format '{other}' in config file: expected csv or json"
                )))
            }
        },
    };

    let pair = resolve_pair(common, &file, domain, &grid)?;
    let output = common.output.clone().or(file.output);

    Ok(Resolved {
        pair,
        policy,
        stages,
        window,
        grid,
        format,
        output,
    })
}

enum PairChoice<'a> {
    Named(&'a str),
    Texts(&'a str, &'a str),
}

fn pair_choice<'a>(
    pair: Option<&'a str>,
    m: Option<&'a str>,
    n: Option<&'a str>,
) -> Result<Option<PairChoice<'a>>> {
    match (pair, m, n) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => Err(Error::Config(
            "give either a named pair or mean_m/mean_n, not both".into(),
        )),
        (Some(p), None, None) => Ok(Some(PairChoice::Named(p))),
        (None, Some(m), Some(n)) => Ok(Some(PairChoice::Texts(m, n))),
        (None, Some(_), None) | (None, None, Some(_)) => Err(Error::Config(
            "mean_m and mean_n must be given together".into(),
        )),
        (None, None, None) => Ok(None),
    }
}

/// Pick the pair from flags first, then the file. Expression pairs get
/// comparability evidence automatically: when m <= n holds at every grid
/// sample the pair is flagged comparable (enabling the staged iteration),
/// otherwise it is left unflagged rather than rejected.
fn resolve_pair(
    common: &CommonOpts,
    file: &FileConfig,
    domain: Interval,
    grid: &GridSpec,
) -> Result<MeanPair> {
    let from_flags = pair_choice(
        common.pair.as_deref(),
        common.mean_m.as_deref(),
        common.mean_n.as_deref(),
    )?;
    let choice = match from_flags {
        Some(c) => c,
        None => pair_choice(
            file.pair.as_deref(),
            file.mean_m.as_deref(),
            file.mean_n.as_deref(),
        )?
        .ok_or_else(|| {
            Error::Config("no pair configured: give --pair <name> or --mean-m/--mean-n".into())
        })?,
    };
    match choice {
        PairChoice::Named(name) => match name {
            "example31" => example_pair(domain),
            other => Err(Error::Config(format!(
                "unknown pair '{other}' (available: example31)"
            ))),
        },
        PairChoice::Texts(mt, nt) => {
            let m = mean_from_text(mt, domain, grid)?;
            let n = mean_from_text(nt, domain, grid)?;
            let pair = MeanPair::new(m, n)?;
            match pair.clone().flag_comparable_checked(grid) {
                Ok(flagged) => Ok(flagged),
                Err(Error::MeanBounds { .. }) => Ok(pair),
                Err(e) => Err(e),
            }
        }
    }
}

/// A mean given as text: a builtin name, `power:<p>`, or a DSL expression.
fn mean_from_text(text: &str, domain: Interval, grid: &GridSpec) -> Result<Mean> {
    let text = text.trim();
    let kind = match text {
        "arithmetic" => Some(MeanKind::Arithmetic),
        "geometric" => Some(MeanKind::Geometric),
        "harmonic" => Some(MeanKind::Harmonic),
        "min" => Some(MeanKind::Min),
        "max" => Some(MeanKind::Max),
        _ => match text.strip_prefix("power:") {
            Some(p) => {
                Some(MeanKind::Power(p.parse().map_err(|_| {
                    Error::Config(format!("bad power exponent '{p}'"))
                })?))
            }
            None => None,
        },
    };
    match kind {
        Some(kind) => Mean::builtin(kind, domain),
        None => expr::mean_from_source(text, domain, grid),
    }
}

enum Target {
    Lo,
    Up,
    Tr,
    Bo(TailFunctional),
    Stage(usize, StageSide),
}

fn parse_target(text: &str) -> Result<Target> {
    match text {
        "lo" => return Ok(Target::Lo),
        "up" => return Ok(Target::Up),
        "tr" => return Ok(Target::Tr),
        _ => {}
    }
    if let Some(rest) = text.strip_prefix("bo:") {
        return Ok(Target::Bo(parse_functional(rest)?));
    }
    if let Some(rest) = text.strip_prefix("stage:") {
        let (num, side) = match rest.split_once(':') {
            None => (rest, StageSide::Lower),
            Some((num, "lower")) => (num, StageSide::Lower),
            Some((num, "upper")) => (num, StageSide::Upper),
            Some((_, other)) => {
                return Err(Error::Config(format!(
                    "unknown stage side '{other}': expected lower or upper"
                )))
            }
        };
        let stage = num
            .parse::<usize>()
            .map_err(|_| Error::Config(format!("bad stage number '{num}'")))?;
        return Ok(Target::Stage(stage, side));
    }
    Err(Error::Config(format!(
        "unknown target '{text}': expected lo, up, tr, bo:<functional>, or stage:<k>[:lower|:upper]"
    )))
}

fn parse_functional(text: &str) -> Result<TailFunctional> {
    match text {
        "liminf" => Ok(TailFunctional::Liminf),
        "limsup" => Ok(TailFunctional::Limsup),
        _ => match text.strip_prefix("w:") {
            Some(src) => Ok(TailFunctional::Weighted(WeightFn::parse(src)?)),
            None => Err(Error::Config(format!(
                "unknown tail functional '{text}': expected liminf, limsup, or w:<expr>"
            ))),
        },
    }
}

fn cmd_eval(args: EvalArgs) -> Result<i32> {
    let cfg = resolve(&args.common, None)?;
    let (x, y) = (args.x, args.y);
    let (value, approximate) = match parse_target(&args.target)? {
        Target::Lo => {
            let lu = orbit::lower_upper(&cfg.pair, x, y, &cfg.policy)?;
            (lu.lo, !lu.converged)
        }
        Target::Up => {
            let lu = orbit::lower_upper(&cfg.pair, x, y, &cfg.policy)?;
            (lu.up, !lu.converged)
        }
        Target::Tr => {
            let report = transfinite::transfinite_iterate(&cfg.pair, x, y, &cfg.stages)?;
            (report.tr_value, report.approximate())
        }
        Target::Bo(functional) => {
            let out = limitlike::orbit_functional_value(
                &cfg.pair,
                &functional,
                &cfg.policy,
                cfg.window,
                x,
                y,
            )?;
            (out.value, !out.converged)
        }
        Target::Stage(stage, side) => {
            let report = transfinite::stage_report(&cfg.pair, stage, &cfg.stages, x, y)?;
            let value = match side {
                StageSide::Lower => report.final_pair.0,
                StageSide::Upper => report.final_pair.1,
            };
            // The stage budget is the request itself, so running out of
            // stages is expected here; only inner-orbit budget exhaustion
            // or a frozen configuration degrades the value.
            let approximate = !report.inner_converged || report.termination == Termination::Stalled;
            (value, approximate)
        }
    };
    write_output(&cfg.output, &format!("{value}\n"))?;
    if approximate {
        eprintln!("note: value is approximate (stopping rule not met)");
        Ok(EXIT_APPROXIMATE)
    } else {
        Ok(EXIT_OK)
    }
}

#[derive(Serialize)]
struct PairDoc {
    m: String,
    n: String,
    domain: [f64; 2],
    symmetric: bool,
    comparable_le: bool,
}

fn pair_doc(pair: &MeanPair) -> PairDoc {
    PairDoc {
        m: pair.m().name().to_string(),
        n: pair.n().name().to_string(),
        domain: [pair.domain().lo(), pair.domain().hi()],
        symmetric: pair.symmetric(),
        comparable_le: pair.comparable_le(),
    }
}

#[derive(Serialize)]
struct PolicyDoc {
    gap_tol: f64,
    max_steps: usize,
    store_cap: usize,
}

#[derive(Serialize)]
struct TraceRow {
    n: usize,
    x: f64,
    y: f64,
    gap: f64,
}

#[derive(Serialize)]
struct TraceDoc {
    pair: PairDoc,
    start: [f64; 2],
    policy: PolicyDoc,
    steps: usize,
    converged: bool,
    final_gap: f64,
    truncated: bool,
    rows: Vec<TraceRow>,
}

fn render_csv(trace: &OrbitTrace) -> String {
    let mut out = String::from("n,x_n,y_n,gap\n");
    for (n, &(x, y)) in trace.pairs().iter().enumerate() {
        let _ = writeln!(out, "{n},{x:.16e},{y:.16e},{:.16e}", (x - y).abs());
    }
    out
}

fn cmd_orbit(args: OrbitArgs) -> Result<i32> {
    let cfg = resolve(&args.common, args.format)?;
    let trace = orbit::iterate(&cfg.pair, args.x, args.y, &cfg.policy)?;
    let text = match cfg.format {
        TraceFormat::Csv => render_csv(&trace),
        TraceFormat::Json => {
            let rows = trace
                .pairs()
                .iter()
                .enumerate()
                .map(|(n, &(x, y))| TraceRow {
                    n,
                    x,
                    y,
                    gap: (x - y).abs(),
                })
                .collect();
            let doc = TraceDoc {
                pair: pair_doc(&cfg.pair),
                start: [args.x, args.y],
                policy: PolicyDoc {
                    gap_tol: cfg.policy.gap_tol,
                    max_steps: cfg.policy.max_steps,
                    store_cap: cfg.policy.store_cap,
                },
                steps: trace.steps(),
                converged: trace.converged(),
                final_gap: trace.final_gap(),
                truncated: trace.truncated(),
                rows,
            };
            to_pretty_json(&doc)?
        }
    };
    write_output(&cfg.output, &text)?;
    Ok(if trace.converged() {
        EXIT_OK
    } else {
        EXIT_APPROXIMATE
    })
}

/// Envelope of every check report: which suite ran, the verdict, the pair
/// and grid it ran against, then the suite-specific payload.
#[derive(Serialize)]
struct CheckDoc<R: Serialize> {
    check: &'static str,
    pass: bool,
    pair: PairDoc,
    grid: GridSpec,
    report: R,
}

#[derive(Serialize)]
struct InvarianceDoc {
    residual_tol: f64,
    invariant: bool,
    details: invariance::InvarianceReport,
}

#[derive(Serialize)]
struct PhiDoc {
    phi: String,
    details: invariance::DecompositionReport,
}

#[derive(Serialize)]
struct LimitlikeDoc {
    sequences: usize,
    functionals: Vec<limitlike::LawReport>,
}

fn cmd_check(args: CheckArgs) -> Result<i32> {
    let cfg = resolve(&args.common, None)?;
    let (pass, text) = match args.kind {
        CheckKind::Properties => {
            let report = properties::check_properties(&cfg.pair, &cfg.grid)?;
            render_check("properties", report.all_hold(), &cfg, report)?
        }
        CheckKind::Invariance => {
            let [text] = args.candidates.as_slice() else {
                return Err(Error::Config(
                    "the invariance check needs exactly one --k <mean>".into(),
                ));
            };
            let k = mean_from_text(text, cfg.pair.domain(), &cfg.grid)?;
            let details = invariance::invariance_residual(&k, &cfg.pair, &cfg.grid)?;
            let invariant = details.max_residual < RESIDUAL_TOL;
            let doc = InvarianceDoc {
                residual_tol: RESIDUAL_TOL,
                invariant,
                details,
            };
            render_check("invariance", invariant, &cfg, doc)?
        }
        CheckKind::Ordering => {
            if args.candidates.is_empty() {
                return Err(Error::Config(
                    "the ordering check needs at least one --k <mean>".into(),
                ));
            }
            let candidates = args
                .candidates
                .iter()
                .map(|t| mean_from_text(t, cfg.pair.domain(), &cfg.grid))
                .collect::<Result<Vec<_>>>()?;
            let report =
                invariance::ordering_check(&cfg.pair, &candidates, &cfg.grid, &cfg.policy)?;
            let pass = report.all_within && report.excluded.is_empty();
            render_check("ordering", pass, &cfg, report)?
        }
        CheckKind::Phi => {
            let Some(phi_text) = args.phi.as_deref() else {
                return Err(Error::Config("the phi check needs --phi <expr>".into()));
            };
            let phi = expr::parse(phi_text)?;
            let details = invariance::decomposition_check(&phi, &cfg.pair, &cfg.grid, &cfg.stages)?;
            let pass = details.invariance_holds
                && details.composition_holds
                && details.inverse_holds.unwrap_or(true);
            let doc = PhiDoc {
                phi: phi_text.to_string(),
                details,
            };
            render_check("phi", pass, &cfg, doc)?
        }
        CheckKind::Uniqueness => {
            let report =
                transfinite::continuity_probe(&cfg.pair, cfg.grid.axis_points, &cfg.stages)?;
            let pass = !report.jump_detected && report.approximate_nodes == 0;
            render_check("uniqueness", pass, &cfg, report)?
        }
        CheckKind::Limitlike => {
            let functionals = if args.functionals.is_empty() {
                vec![TailFunctional::Liminf, TailFunctional::Limsup]
            } else {
                args.functionals
                    .iter()
                    .map(|t| parse_functional(t))
                    .collect::<Result<Vec<_>>>()?
            };
            let family = limitlike::standard_test_family();
            let reports = functionals
                .iter()
                .map(|f| limitlike::check_tail_laws(f, &family))
                .collect::<Result<Vec<_>>>()?;
            let pass = reports.iter().all(|r| r.all_hold());
            let doc = LimitlikeDoc {
                sequences: family.len(),
                functionals: reports,
            };
            render_check("limitlike", pass, &cfg, doc)?
        }
    };
    write_output(&cfg.output, &text)?;
    Ok(if pass { EXIT_OK } else { EXIT_APPROXIMATE })
}

fn render_check<R: Serialize>(
    check: &'static str,
    pass: bool,
    cfg: &Resolved,
    report: R,
) -> Result<(bool, String)> {
    let doc = CheckDoc {
        check,
        pass,
        pair: pair_doc(&cfg.pair),
        grid: cfg.grid,
        report,
    };
    Ok((pass, to_pretty_json(&doc)?))
}

fn to_pretty_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Config(format!("report serialization: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
