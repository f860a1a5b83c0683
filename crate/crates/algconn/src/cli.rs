//! The `algconn` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (the
//! offending graphs go to stderr as graph6), 2 for usage, input or
//! parameter errors.

use std::ffi::OsString;
use std::io::{self, BufReader, Write};
use std::path::Path;

use algconn_core::bounds::{sandwich_report, BoundsReport};
use algconn_core::clique::max_clique;
use algconn_core::graph::{self, Graph, TailedCliqueSpec};
use algconn_core::graph6::ParseOptions;
use algconn_core::scan::{
    erdos_stone_trend, verify_supersaturation, Accumulator, ExtremalCertificate, GraphFacts, MaxScan, MinScan, SandwichScan, ScanConfig,
    Source, SupersatScan,
};
use algconn_core::spectra::{fiedler_vector, laplacian_spectrum, MULTIPLICITY_TOLERANCE};
use algconn_core::transforms::{
    fiedler_sign_report, kite_minimality_chain, switch_check, switch_clique_attachment, tailed_clique_sweep, theta_vs_kite,
    verify_rewrite_grid, FiedlerSignReport, KiteChain, SwitchReport, ThetaKiteComparison,
};
use clap::{ArgAction, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{open_corpus, read_corpus, CorpusError};
use crate::driver::{default_jobs, scan_parallel};
use crate::output::{Emitter, Format};

#[derive(Debug, Parser)]
#[command(name = "algconn", version, about = "Algebraic connectivity and clique number toolkit")]
pub struct Cli {
    /// Slack for inequality checks in scans.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tolerance: f64,
    /// Largest order accepted by exhaustive enumeration (at most 9).
    #[arg(long, global = true, default_value_t = 7)]
    pub guard: usize,
    /// Scan worker threads [default: available parallelism].
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Reject graph6 records with nonzero padding or non-canonical size.
    #[arg(long = "strict-g6", global = true, default_value_t = true, action = ArgAction::Set)]
    pub strict_g6: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the graph6 record of a named graph.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Laplacian eigenvalues, α, its multiplicity and the Fiedler vector.
    Spectrum {
        /// graph6 record, `-` for stdin, or `@path` for a file.
        input: String,
    },
    /// Clique number and one maximum clique.
    Clique { input: String },
    /// Clique bounds from α and the degree chain.
    Bounds { input: String },
    /// Pendant-path rewrites on tailed cliques.
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
    /// Exhaustive verification over small orders or a graph6 corpus.
    Scan {
        #[command(subcommand)]
        op: ScanOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Complete { n: usize },
    Empty { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Turan { n: usize, r: usize },
    Kite { n: usize, r: usize },
    TailedClique { r: usize, k: usize, l: usize },
    ThetaKite { r: usize, k: usize },
    /// Join of two graphs given as graph6 records.
    JoinOf { a: String, b: String },
}

#[derive(Debug, Subcommand)]
pub enum TransformOp {
    /// α of every tailed clique of order n against the kite.
    Chain { r: usize, n: usize },
    /// α(theta_kite(r, k)) against α(kite(r + k, r)).
    Theta { r: usize, k: usize },
    /// Sign structure of the Fiedler vector of tailed_clique(r, k, l).
    Fiedler { r: usize, k: usize, l: usize },
    /// Both clique-attachment switches of tailed_clique(r, k, l).
    Switch { r: usize, k: usize, l: usize },
    /// α table of tailed cliques, one row per (r, k, l).
    Sweep {
        #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
        r: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        max_tail: usize,
    },
    /// Every monotonicity and sign check over the tailed-clique grid.
    Grid {
        #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
        r: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        max_tail: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScanOp {
    /// Maximum α over K_{r+1}-free graphs of order n.
    Max {
        n: usize,
        r: usize,
        /// Read graphs from a graph6 file (`-` for stdin) instead of enumerating.
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Minimum α over connected graphs of order n with clique number r.
    Min {
        n: usize,
        r: usize,
        #[arg(long)]
        corpus: Option<String>,
    },
    /// α(T_{n,r}) / n for n = r..=n_max.
    Trend { r: usize, n_max: usize },
    /// Graphs with α >= n - ceil(n/r) + εn contain K_{k,...,k} (r parts).
    Supersat {
        n: usize,
        r: usize,
        k: usize,
        epsilon: f64,
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Clique bounds on every connected non-complete graph of order n.
    Sandwich {
        n: usize,
        /// Also check the degree chain (one max-flow per graph).
        #[arg(long)]
        chain: bool,
        #[arg(long)]
        corpus: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] algconn_core::Error),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Whether every check in a command passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Counterexample,
}

impl Outcome {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Counterexample
        }
    }

    fn and(self, other: Outcome) -> Outcome {
        if self == Outcome::Pass {
            other
        } else {
            self
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = io::stdout();
    match execute(&cli, &mut stdout.lock()) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Counterexample) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

struct Ctx {
    cfg: ScanConfig,
    jobs: usize,
    format: Format,
    parse: ParseOptions,
}

pub fn execute<W: Write>(cli: &Cli, out: &mut W) -> Result<Outcome, CliError> {
    if cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        return Err(CliError::Usage("--tolerance must be positive".into()));
    }
    if cli.jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let cfg = ScanConfig {
        guard: cli.guard,
        tolerance: cli.tolerance,
        ..ScanConfig::default()
    };
    cfg.validate()?;
    let ctx = Ctx {
        cfg,
        jobs: cli.jobs.unwrap_or_else(default_jobs),
        format: cli.format,
        parse: ParseOptions { strict: cli.strict_g6 },
    };
    match &cli.command {
        Command::Construct { family } => construct(family, &ctx, out),
        Command::Spectrum { input } => per_graph(input, &ctx, out, spectrum_record),
        Command::Clique { input } => per_graph(input, &ctx, out, |g| {
            let w = max_clique(g);
            Ok((
                CliqueRecord {
                    graph: g.to_string(),
                    n: g.order(),
                    omega: w.omega,
                    clique: w.vertices,
                },
                Outcome::Pass,
            ))
        }),
        Command::Bounds { input } => per_graph(input, &ctx, out, |g| {
            let report = sandwich_report(g)?;
            let outcome = Outcome::from_pass(report.ok());
            Ok((
                BoundsRecord {
                    graph: g.to_string(),
                    report,
                },
                outcome,
            ))
        }),
        Command::Transform { op } => transform(op, &ctx, out),
        Command::Scan { op } => scan(op, &ctx, out),
    }
}

fn construct<W: Write>(family: &Family, ctx: &Ctx, out: &mut W) -> Result<Outcome, CliError> {
    let g = match *family {
        Family::Complete { n } => graph::complete(n)?,
        Family::Empty { n } => Graph::empty(n)?,
        Family::Path { n } => graph::path(n)?,
        Family::Cycle { n } => graph::cycle(n)?,
        Family::Turan { n, r } => graph::turan(n, r)?,
        Family::Kite { n, r } => graph::kite(n, r)?,
        Family::TailedClique { r, k, l } => graph::tailed_clique(TailedCliqueSpec::new(r, k, l)?)?,
        Family::ThetaKite { r, k } => graph::theta_kite(r, k)?,
        Family::JoinOf { ref a, ref b } => {
            let parse = |s: &str| algconn_core::graph6::parse_graph6_with(s.as_bytes(), ctx.parse).map_err(algconn_core::Error::from);
            graph::join(&parse(a)?, &parse(b)?)?
        }
    };
    writeln!(out, "{g}")?;
    Ok(Outcome::Pass)
}

/// Graphs named by an input argument: `-` is stdin, `@path` a file, anything
/// else a single graph6 record.
fn inputs(arg: &str, parse: ParseOptions) -> Result<Box<dyn Iterator<Item = Result<Graph, CorpusError>>>, CliError> {
    if arg == "-" {
        Ok(Box::new(read_corpus(BufReader::new(io::stdin()), parse)))
    } else if let Some(path) = arg.strip_prefix('@') {
        Ok(Box::new(open_corpus(Path::new(path), parse)?))
    } else {
        Ok(Box::new(read_corpus(io::Cursor::new(arg.as_bytes().to_vec()), parse)))
    }
}

fn corpus_graphs(arg: &str, parse: ParseOptions) -> Result<Vec<Graph>, CliError> {
    let it = if arg == "-" || arg.starts_with('@') {
        inputs(arg, parse)?
    } else {
        Box::new(open_corpus(Path::new(arg), parse)?)
    };
    Ok(it.collect::<Result<_, _>>()?)
}

/// Emits one record per input graph as it is read. A graph whose check
/// errors is reported on stderr and turns the exit code into 2 after the
/// batch finishes.
fn per_graph<W, T, F>(input: &str, ctx: &Ctx, out: &mut W, mut f: F) -> Result<Outcome, CliError>
where
    W: Write,
    T: Serialize,
    F: FnMut(&Graph) -> Result<(T, Outcome), CliError>,
{
    let mut emitter = Emitter::new(ctx.format, &mut *out);
    let mut outcome = Outcome::Pass;
    let mut first_error = None;
    for item in inputs(input, ctx.parse)? {
        let g = item?;
        match f(&g) {
            Ok((record, o)) => {
                if o == Outcome::Counterexample {
                    eprintln!("counterexample: {g}");
                }
                outcome = outcome.and(o);
                emitter.emit(&record)?;
            }
            Err(e) => {
                eprintln!("{g}: {e}");
                first_error.get_or_insert(e);
            }
        }
    }
    emitter.finish()?;
    match first_error {
        Some(e) => Err(e),
        None => Ok(outcome),
    }
}

#[derive(Serialize)]
struct SpectrumRecord {
    graph: String,
    n: usize,
    connected: bool,
    eigenvalues: Vec<f64>,
    /// Exactly 0 for disconnected graphs; absent for a single vertex.
    alpha: Option<f64>,
    alpha_multiplicity: Option<usize>,
    fiedler: Option<Vec<f64>>,
}

fn spectrum_record(g: &Graph) -> Result<(SpectrumRecord, Outcome), CliError> {
    let spec = laplacian_spectrum(g)?;
    let connected = graph::is_connected(g);
    let n = g.order();
    let (alpha, fiedler) = if n < 2 {
        (None, None)
    } else if connected {
        let x = fiedler_vector(g)?;
        (Some(x.alpha), Some(x.values))
    } else {
        (Some(0.0), None)
    };
    let alpha_multiplicity = alpha.map(|a| spec.multiplicity(a, MULTIPLICITY_TOLERANCE));
    Ok((
        SpectrumRecord {
            graph: g.to_string(),
            n,
            connected,
            eigenvalues: spec.eigenvalues,
            alpha,
            alpha_multiplicity,
            fiedler,
        },
        Outcome::Pass,
    ))
}

#[derive(Serialize)]
struct CliqueRecord {
    graph: String,
    n: usize,
    omega: usize,
    clique: Vec<usize>,
}

#[derive(Serialize)]
struct BoundsRecord {
    graph: String,
    #[serde(flatten)]
    report: BoundsReport,
}

#[derive(Serialize)]
struct ChainRecord {
    #[serde(flatten)]
    chain: KiteChain,
    strictly_decreasing: bool,
    above_kite: bool,
}

#[derive(Serialize)]
struct ThetaRecord {
    #[serde(flatten)]
    cmp: ThetaKiteComparison,
    strict: bool,
}

#[derive(Serialize)]
struct FiedlerRecord {
    #[serde(flatten)]
    report: FiedlerSignReport,
    holds: bool,
}

#[derive(Serialize)]
struct SwitchRecord {
    #[serde(flatten)]
    report: SwitchReport,
    longer_u: String,
    longer_v: String,
}

#[derive(Serialize)]
struct GridRecord {
    r: usize,
    max_tail: usize,
    comparisons: usize,
    violations: usize,
    fiedler_checked: usize,
    fiedler_skipped: usize,
    fiedler_failed: usize,
    details: Vec<String>,
}

fn transform<W: Write>(op: &TransformOp, ctx: &Ctx, out: &mut W) -> Result<Outcome, CliError> {
    let mut e = Emitter::new(ctx.format, &mut *out);
    let outcome = match op {
        TransformOp::Chain { r, n } => {
            let chain = kite_minimality_chain(*r, *n)?;
            let rec = ChainRecord {
                strictly_decreasing: chain.strictly_decreasing(),
                above_kite: chain.above_kite(),
                chain,
            };
            e.emit(&rec)?;
            Outcome::from_pass(rec.strictly_decreasing && rec.above_kite)
        }
        TransformOp::Theta { r, k } => {
            let cmp = theta_vs_kite(*r, *k)?;
            e.emit(&ThetaRecord { cmp, strict: cmp.strict() })?;
            Outcome::from_pass(cmp.strict())
        }
        TransformOp::Fiedler { r, k, l } => {
            let report = fiedler_sign_report(TailedCliqueSpec::new(*r, *k, *l)?)?;
            let holds = report.holds();
            e.emit(&FiedlerRecord { report, holds })?;
            Outcome::from_pass(holds)
        }
        TransformOp::Switch { r, k, l } => {
            let spec = TailedCliqueSpec::new(*r, *k, *l)?;
            let (a, b) = switch_clique_attachment(spec)?;
            let report = switch_check(spec)?;
            let pass = report.shapes_ok && report.holds;
            e.emit(&SwitchRecord {
                report,
                longer_u: a.to_string(),
                longer_v: b.to_string(),
            })?;
            Outcome::from_pass(pass)
        }
        TransformOp::Sweep { r, max_tail } => {
            for &r in r {
                for row in tailed_clique_sweep(r, *max_tail)? {
                    e.emit(&row)?;
                }
            }
            Outcome::Pass
        }
        TransformOp::Grid { r, max_tail } => {
            let mut outcome = Outcome::Pass;
            for &r in r {
                let grid = verify_rewrite_grid(r, *max_tail)?;
                let mut details: Vec<String> = grid.violations.iter().map(|v| format!("{v:?}")).collect();
                let (mut checked, mut skipped, mut failed) = (0, 0, 0);
                for total in 2..=*max_tail {
                    for k in total.div_ceil(2)..total {
                        let rep = fiedler_sign_report(TailedCliqueSpec::new(r, k, total - k)?)?;
                        checked += 1;
                        skipped += usize::from(rep.skipped);
                        if !rep.holds() {
                            failed += 1;
                            details.push(format!("fiedler structure fails at (k, l) = ({k}, {})", total - k));
                        }
                    }
                }
                let pass = grid.violations.is_empty() && failed == 0;
                outcome = outcome.and(Outcome::from_pass(pass));
                e.emit(&GridRecord {
                    r,
                    max_tail: *max_tail,
                    comparisons: grid.comparisons,
                    violations: grid.violations.len(),
                    fiedler_checked: checked,
                    fiedler_skipped: skipped,
                    fiedler_failed: failed,
                    details,
                })?;
            }
            outcome
        }
    };
    e.finish()?;
    Ok(outcome)
}

fn report_counterexamples(cert: &ExtremalCertificate) {
    for c in &cert.counterexamples {
        eprintln!("counterexample: {} (alpha = {}, {})", c.graph, c.alpha, c.reason);
    }
}

/// Runs `acc` over the corpus at `corpus`, or over every labeled graph of
/// order `n` in parallel.
fn run_scan<A, F>(n: usize, corpus: Option<&str>, ctx: &Ctx, make: F) -> Result<(A, Source), CliError>
where
    A: Accumulator + Send,
    F: Fn() -> algconn_core::Result<A> + Sync,
{
    match corpus {
        Some(path) => {
            let mut acc = make()?;
            for g in corpus_graphs(path, ctx.parse)? {
                acc.observe(&GraphFacts::new(g))?;
            }
            Ok((acc, Source::Corpus(path.to_owned())))
        }
        None => Ok((scan_parallel(n, &ctx.cfg, ctx.jobs, make)?, Source::Enumeration)),
    }
}

fn scan<W: Write>(op: &ScanOp, ctx: &Ctx, out: &mut W) -> Result<Outcome, CliError> {
    let mut e = Emitter::new(ctx.format, &mut *out);
    let cfg = ctx.cfg;
    let outcome = match op {
        ScanOp::Max { n, r, corpus } => {
            let (acc, source) = run_scan(*n, corpus.as_deref(), ctx, || MaxScan::new(*n, *r, &cfg))?;
            let cert = acc.finish(source)?;
            report_counterexamples(&cert);
            e.emit(&cert)?;
            Outcome::from_pass(cert.passed())
        }
        ScanOp::Min { n, r, corpus } => {
            let (acc, source) = run_scan(*n, corpus.as_deref(), ctx, || MinScan::new(*n, *r, &cfg))?;
            let cert = acc.finish(source)?;
            report_counterexamples(&cert);
            e.emit(&cert)?;
            Outcome::from_pass(cert.passed())
        }
        ScanOp::Trend { r, n_max } => {
            let table = erdos_stone_trend(*r, *n_max)?;
            for row in &table.rows {
                e.emit(row)?;
            }
            Outcome::from_pass(table.passed())
        }
        ScanOp::Supersat { n, r, k, epsilon, corpus } => {
            let report = match corpus {
                Some(path) => {
                    let mut acc = SupersatScan::new(*n, *r, *k, *epsilon, &cfg)?;
                    for g in corpus_graphs(path, ctx.parse)? {
                        acc.observe(&GraphFacts::new(g))?;
                    }
                    acc.finish(None, Source::Corpus(path.clone()))
                }
                None => verify_supersaturation(*n, *r, *k, *epsilon, &cfg)?,
            };
            for g in &report.violations {
                eprintln!("counterexample: {g}");
            }
            e.emit(&report)?;
            Outcome::from_pass(report.passed())
        }
        ScanOp::Sandwich { n, chain, corpus } => {
            let (acc, _) = run_scan(*n, corpus.as_deref(), ctx, || Ok(SandwichScan::new(*n, *chain)))?;
            let summary = acc.finish()?;
            for c in &summary.violations {
                eprintln!("counterexample: {} ({})", c.graph, c.reason);
            }
            e.emit(&summary)?;
            Outcome::from_pass(summary.passed())
        }
    };
    e.finish()?;
    Ok(outcome)
}
