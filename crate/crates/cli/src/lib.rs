//! Command-line front end: argument model, command dispatch and output
//! rendering. `run` is pure apart from the optional enumeration cache, so
//! tests drive it directly.

use std::io::BufRead;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclemax::analytic::{self, bessel_at_two, BesselOrder};
use cyclemax::enumerate::{enumerate_cached, CacheStatus};
use cyclemax::formula::{
    asymptotic_estimate, balanced_lower_bound, balanced_total, balanced_upper_bound_141, formula_spectrum,
};
use cyclemax::report::strip_runtime;
use cyclemax::scalar::{format_decimal, Bracket};
use cyclemax::verify::{self, EdgeCheckMode, EXHAUSTIVE_MAX};
use cyclemax::{
    canonical_key, count_cycles, graph6, CycleSpectrum, Error, Graph, GraphClassSpec, Mode, VerificationReport,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Conjecture checks above this order need `--budget`.
pub const DEFAULT_BUDGET: usize = 10;
const PLACES: usize = 30;

pub const EXIT_PASSED: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(name = "cyclemax", version, about = "Exact cycle counts and bound checks for triangle-free graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for enumeration cache files.
    #[arg(long, global = true, env = "CYCLEMAX_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    /// Largest order for conjecture checks (at most 13).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Cycle spectra of graph6 graphs read from standard input.
    Count,
    /// Cycle spectrum of K_{a,b}, or of the balanced graph on n vertices.
    Formula(FormulaArgs),
    /// Bound expressions at order n, or sequence values at index ell.
    Bounds(BoundsArgs),
    /// One graph per isomorphism class of triangle-free graphs.
    Enumerate(EnumerateArgs),
    /// Run one check.
    Verify(VerifyArgs),
    /// Run the full suite and emit one aggregate document.
    Report,
}

#[derive(Args, Debug, Clone)]
pub struct FormulaArgs {
    #[arg(long, requires = "b", conflicts_with = "n")]
    pub a: Option<usize>,
    #[arg(long, requires = "a")]
    pub b: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct BoundsArgs {
    #[arg(long, conflicts_with = "ell")]
    pub n: Option<u64>,
    #[arg(long)]
    pub ell: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = EnumMode::All)]
    pub mode: EnumMode,
    #[arg(long)]
    pub min_degree: Option<usize>,
    #[arg(long)]
    pub connected: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,
    /// Order, or largest order for the range checks.
    #[arg(long)]
    pub n: Option<usize>,
    /// Graph selection for the edge bound check.
    #[arg(long, value_enum, default_value_t = EdgeMode::Exhaustive)]
    pub mode: EdgeMode,
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    All,
    Maximal,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeMode {
    Exhaustive,
    Sampled,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Conjecture,
    Paths6,
    Hamiltonian,
    EdgeBound,
    Andrasfai,
    Analytic,
    Avoiding,
}

/// Exit status plus the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// A row of the flat per-graph table.
struct GraphRow {
    n: usize,
    key: String,
    spectrum: CycleSpectrum,
}

/// What a command produced before rendering.
struct Results {
    items: Vec<Value>,
    rows: Option<Vec<GraphRow>>,
    reports: Vec<VerificationReport>,
    params: Value,
    notes: Vec<String>,
}

impl Results {
    fn new(params: Value) -> Self {
        Results {
            items: Vec::new(),
            rows: None,
            reports: Vec::new(),
            params,
            notes: Vec::new(),
        }
    }

    fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Count => "count",
        Command::Formula(_) => "formula",
        Command::Bounds(_) => "bounds",
        Command::Enumerate(_) => "enumerate",
        Command::Verify(_) => "verify",
        Command::Report => "report",
    }
}

/// Executes `config`, reading graph6 lines from `input` for `count`.
pub fn run(config: &RunConfig, input: &mut dyn BufRead) -> Outcome {
    if config.budget > verify::CONJECTURE_MAX {
        return Outcome::usage(format!("--budget is at most {}", verify::CONJECTURE_MAX));
    }
    if config.format == Format::Csv && !matches!(config.command, Command::Count | Command::Enumerate(_) | Command::Formula(_)) {
        return Outcome::usage("csv output is available for count, enumerate and formula");
    }
    let pool = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w as usize).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let mut text = String::new();
    if matches!(config.command, Command::Count) {
        if let Err(e) = input.read_to_string(&mut text) {
            return Outcome::usage(e);
        }
    }
    let results = pool.install(|| dispatch(config, &text));
    match results {
        Ok(results) => render(config, results),
        Err(e) => Outcome::usage(e),
    }
}

fn dispatch(config: &RunConfig, input: &str) -> Result<Results, Error> {
    match &config.command {
        Command::Count => count(input),
        Command::Formula(args) => formula(args),
        Command::Bounds(args) => bounds(args),
        Command::Enumerate(args) => enumerate(config, args),
        Command::Verify(args) => verify_one(config, args),
        Command::Report => report_results(config),
    }
}

fn spectrum_json(s: &CycleSpectrum) -> Value {
    serde_json::to_value(s).expect("spectrum serializes")
}

fn graph_item(n: usize, key: &str, spectrum: &CycleSpectrum) -> Value {
    json!({
        "n": n.to_string(),
        "canonical_key": key,
        "spectrum": spectrum_json(spectrum),
        "total": spectrum.total().to_string(),
    })
}

fn count(input: &str) -> Result<Results, Error> {
    let mut results = Results::new(json!({}));
    let mut rows = Vec::new();
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line)?;
        let spectrum = count_cycles(&g);
        let key = canonical_key(&g).to_string();
        let mut item = graph_item(g.order(), &key, &spectrum);
        item["graph6"] = line.into();
        results.items.push(item);
        rows.push(GraphRow { n: g.order(), key, spectrum });
    }
    results.rows = Some(rows);
    Ok(results)
}

fn formula(args: &FormulaArgs) -> Result<Results, Error> {
    let (a, b) = match (args.a, args.b, args.n) {
        (Some(a), Some(b), None) => (a, b),
        (None, None, Some(n)) => (n / 2, n - n / 2),
        _ => return Err(Error::Domain("formula needs --a and --b, or --n".into())),
    };
    let r = formula_spectrum(a, b)?;
    let mut results = Results::new(json!({ "a": a.to_string(), "b": b.to_string() }));
    results.items.push(serde_json::to_value(&r).expect("formula serializes"));
    let key = if a + b <= 64 { canonical_key(&Graph::complete_bipartite(a, b)?).to_string() } else { String::new() };
    results.rows = Some(vec![GraphRow { n: a + b, key, spectrum: r.spectrum }]);
    Ok(results)
}

fn bracket_json(b: &Bracket<cyclemax::ExactRational>) -> Value {
    json!({ "lo": format_decimal(&b.lo, PLACES), "hi": format_decimal(&b.hi, PLACES) })
}

fn bounds(args: &BoundsArgs) -> Result<Results, Error> {
    let mut results;
    let mut values = serde_json::Map::new();
    match (args.n, args.ell) {
        (Some(n), None) => {
            results = Results::new(json!({ "n": n.to_string() }));
            // each expression is reported where it is defined
            let mut put = |name: &str, v: Result<Value, Error>| {
                if let Ok(v) = v {
                    values.insert(name.to_string(), v);
                }
            };
            put("hamiltonian_bound", analytic::ham_bound(n).map(|b| bracket_json(&b)));
            put("avoiding_vertex_bound", analytic::non_x_cycles_bound(n).map(|b| bracket_json(&b)));
            put("factorial_bounds", analytic::robbins_bounds(n).map(|b| bracket_json(&b)));
            let edge = if n % 2 == 0 { analytic::edge_cycle_bound_even(n) } else { analytic::edge_cycle_bound_odd(n) };
            put("edge_cycle_bound", edge.map(|q| format_decimal(&q, PLACES).into()));
            put("balanced_total", balanced_total(n).map(|t| t.to_string().into()));
            put("balanced_lower_bound", balanced_lower_bound(n).map(|q| format_decimal(&q, PLACES).into()));
            put("balanced_upper_bound", balanced_upper_bound_141(n).map(|q| format_decimal(&q, PLACES).into()));
            put("asymptotic_estimate", asymptotic_estimate(n).map(|b| bracket_json(&b)));
            if values.is_empty() {
                return Err(Error::Domain(format!("no bound expression is defined at n = {n}")));
            }
        }
        (None, Some(ell)) => {
            results = Results::new(json!({ "ell": ell.to_string() }));
            let even: cyclemax::ExactRational = analytic::a_even(ell)?;
            let odd: cyclemax::ExactRational = analytic::a_odd(ell)?;
            values.insert("a_even".into(), format_decimal(&even, PLACES).into());
            values.insert("a_odd".into(), format_decimal(&odd, PLACES).into());
            values.insert("i0_of_2".into(), bracket_json(&bessel_at_two(BesselOrder::Zero)));
            values.insert("i1_of_2".into(), bracket_json(&bessel_at_two(BesselOrder::One)));
        }
        _ => return Err(Error::Domain("bounds needs exactly one of --n or --ell".into())),
    }
    results.items.push(Value::Object(values));
    Ok(results)
}

fn enumerate(config: &RunConfig, args: &EnumerateArgs) -> Result<Results, Error> {
    let mode = match args.mode {
        EnumMode::All => Mode::AllTriangleFree,
        EnumMode::Maximal => Mode::MaximalTriangleFree,
    };
    let spec = GraphClassSpec {
        min_degree: args.min_degree,
        connected_only: args.connected,
        ..GraphClassSpec::new(args.n, mode)
    };
    let (graphs, status) = enumerate_cached(&spec, config.cache_dir.as_deref())?;
    let mut results = Results::new(json!({
        "n": args.n.to_string(),
        "mode": mode.to_string(),
        "min_degree": args.min_degree.map(|d| d.to_string()),
        "connected": args.connected,
    }));
    if status != CacheStatus::Disabled {
        results.notes.push(format!("cache: {status:?}"));
    }
    let spectra: Vec<CycleSpectrum> = {
        use rayon::prelude::*;
        graphs.par_iter().map(|(_, g)| count_cycles(g)).collect()
    };
    let mut rows = Vec::with_capacity(graphs.len());
    for ((key, g), spectrum) in graphs.iter().zip(spectra) {
        results.items.push(graph_item(g.order(), key.as_str(), &spectrum));
        rows.push(GraphRow { n: g.order(), key: key.to_string(), spectrum });
    }
    results.rows = Some(rows);
    Ok(results)
}

/// Loads cached enumerations into memory before a check runs.
fn warm_cache(config: &RunConfig, all_up_to: usize, maximal: &[usize]) -> Result<(), Error> {
    let Some(dir) = config.cache_dir.as_deref() else {
        return Ok(());
    };
    for n in 1..=all_up_to {
        enumerate_cached(&GraphClassSpec::all(n), Some(dir))?;
    }
    for &n in maximal {
        enumerate_cached(&GraphClassSpec::maximal(n), Some(dir))?;
    }
    Ok(())
}

fn verify_one(config: &RunConfig, args: &VerifyArgs) -> Result<Results, Error> {
    let mut results = Results::new(json!({
        "check": format!("{:?}", args.check).to_lowercase(),
        "n": args.n.map(|n| n.to_string()),
    }));
    let need = |default: usize| args.n.unwrap_or(default);
    let report = match args.check {
        Check::Conjecture => {
            let n = args.n.ok_or_else(|| Error::Domain("verify conjecture needs --n".into()))?;
            if n > config.budget {
                return Err(Error::Budget(format!("n = {n} exceeds --budget {}", config.budget)));
            }
            warm_cache(config, n.saturating_sub(1).min(12), &[n])?;
            verify::verify_conjecture(n)?
        }
        Check::Paths6 => {
            warm_cache(config, 6, &[])?;
            verify::verify_lemma_paths6()?
        }
        Check::Hamiltonian => {
            warm_cache(config, need(EXHAUSTIVE_MAX).min(EXHAUSTIVE_MAX), &[])?;
            verify::verify_ham_bound(need(EXHAUSTIVE_MAX))?
        }
        Check::EdgeBound => {
            let n = args.n.ok_or_else(|| Error::Domain("verify edge-bound needs --n".into()))?;
            let mode = match args.mode {
                EdgeMode::Exhaustive => {
                    warm_cache(config, n.min(EXHAUSTIVE_MAX), &[])?;
                    EdgeCheckMode::Exhaustive
                }
                EdgeMode::Sampled => EdgeCheckMode::Sampled {
                    samples: args.samples,
                    seed: args.seed,
                },
            };
            verify::verify_edge_cycle_bounds(n, mode)?
        }
        Check::Andrasfai => {
            warm_cache(config, need(EXHAUSTIVE_MAX).min(EXHAUSTIVE_MAX), &[])?;
            verify::verify_andrasfai(need(EXHAUSTIVE_MAX))?
        }
        Check::Analytic => verify::verify_analytic_suite()?,
        Check::Avoiding => {
            warm_cache(config, need(EXHAUSTIVE_MAX).min(EXHAUSTIVE_MAX), &[])?;
            verify::verify_non_x_bound(need(EXHAUSTIVE_MAX))?
        }
    };
    results.items.push(report.to_json());
    results.reports.push(report);
    Ok(results)
}

/// The full suite: analytic ingredients, the conjecture for `4..=budget`,
/// the path, Hamiltonian, min-degree, edge and avoiding-vertex checks.
pub fn report_all(config: &RunConfig) -> Result<Vec<VerificationReport>, Error> {
    let budget = config.budget;
    warm_cache(config, EXHAUSTIVE_MAX.max(budget.saturating_sub(1)).min(12), &(4..=budget).collect::<Vec<_>>())?;
    let mut reports = vec![verify::verify_analytic_suite()?];
    for n in 4..=budget {
        reports.push(verify::verify_conjecture(n)?);
    }
    reports.push(verify::verify_lemma_paths6()?);
    reports.push(verify::verify_ham_bound(EXHAUSTIVE_MAX)?);
    reports.push(verify::verify_andrasfai(EXHAUSTIVE_MAX)?);
    reports.push(verify::verify_edge_cycle_bounds(8, EdgeCheckMode::Exhaustive)?);
    reports.push(verify::verify_non_x_bound(EXHAUSTIVE_MAX)?);
    Ok(reports)
}

fn report_results(config: &RunConfig) -> Result<Results, Error> {
    let reports = report_all(config)?;
    let mut results = Results::new(json!({ "budget": config.budget.to_string() }));
    results.items = reports.iter().map(VerificationReport::to_json).collect();
    results.reports = reports;
    Ok(results)
}

/// Aggregate JSON document for `report` with the given settings, without
/// runtime fields. Used to compare runs.
pub fn report_document(config: &RunConfig) -> Result<Value, Error> {
    let results = report_results(config)?;
    let mut doc = document(config, &results);
    strip_runtime(&mut doc);
    Ok(doc)
}

fn document(config: &RunConfig, results: &Results) -> Value {
    json!({
        "tool_version": TOOL_VERSION,
        "command": command_name(&config.command),
        "params": results.params,
        "results": results.items,
        "all_passed": results.all_passed(),
    })
}

/// Fixed-width table of report outcomes.
pub fn summary_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.claim_id.len()).max().unwrap_or(8).max(8);
    let mut out = format!("{:<width$}  {:<14}  {:>10}  {:<6}  {}\n", "claim", "range", "graphs", "result", "extremal");
    for r in reports {
        out += &format!(
            "{:<width$}  {:<14}  {:>10}  {:<6}  {}\n",
            r.claim_id,
            r.range,
            r.graphs_examined,
            if r.passed { "PASS" } else { "FAIL" },
            r.extremal_value.as_deref().unwrap_or("-"),
        );
    }
    out
}

fn spectrum_list(s: &CycleSpectrum) -> String {
    let parts: Vec<String> = s.counts().iter().map(|(k, c)| format!("{k}:{c}")).collect();
    format!("[{}]", parts.join(", "))
}

fn render(config: &RunConfig, results: Results) -> Outcome {
    let status = if results.all_passed() { EXIT_PASSED } else { EXIT_FAILED };
    let mut stderr: String = results.notes.iter().map(|n| format!("{n}\n")).collect();
    let stdout = match config.format {
        Format::Json => {
            if matches!(config.command, Command::Report) {
                stderr += &summary_table(&results.reports);
            }
            let doc = document(config, &results);
            serde_json::to_string_pretty(&doc).expect("json renders") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "canonical_key", "total_cycles", "spectrum"]).expect("in-memory write");
            for row in results.rows.as_deref().unwrap_or_default() {
                w.write_record([
                    row.n.to_string(),
                    row.key.clone(),
                    row.spectrum.total().to_string(),
                    spectrum_list(&row.spectrum),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            if !results.reports.is_empty() {
                summary_table(&results.reports)
            } else if let Some(rows) = &results.rows {
                rows.iter()
                    .map(|r| format!("{} n={} total={} {}\n", r.key, r.n, r.spectrum.total(), spectrum_list(&r.spectrum)))
                    .collect()
            } else {
                results
                    .items
                    .iter()
                    .map(|v| serde_json::to_string_pretty(v).expect("json renders") + "\n")
                    .collect()
            }
        }
    };
    Outcome { status, stdout, stderr }
}
