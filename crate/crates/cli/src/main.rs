mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dcgraph::coloring::BudgetExhausted;
use dcgraph::properties::{CheckId, Premise, PropertyReport, PropertySuite, SuiteConfig, Verdict};
use dcgraph::search::{self, FilterId, ScanConfig, ScanReport, TMode, MAX_ENUMERATION_ORDER};
use dcgraph::{graph6, structure, ColoringEngine, Graph};

use input::{InputArgs, Named};

/// Exit status: 0 clean, 1 mathematical event, 2 input error, 3 inconclusive.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn input(message: String) -> Self {
        Failure { code: 2, message }
    }

    fn budget(label: &str, e: BudgetExhausted) -> Self {
        Failure { code: 3, message: format!("{label}: {e}") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "dcgraph", version, about = "Exact colouring and double-criticality tools for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Colouring-engine search nodes allowed per graph.
    #[arg(long, env = "DCGRAPH_BUDGET")]
    budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic number with a witness colouring, or a k-colourability verdict.
    Color {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: Common,
        /// Decide k-colourability instead of computing χ.
        #[arg(long, short)]
        k: Option<usize>,
    },
    /// Structural summary: degrees, claws, ω, α, χ, neighbourhood complements.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: Common,
        /// Profile only this vertex's neighbourhood complement.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Run the double-criticality oracle and the property checkers.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: Common,
        /// Comma-separated check ids (names or short aliases); default all.
        #[arg(long)]
        checks: Option<String>,
        /// Assume the graph is double-critical and t-chromatic instead of
        /// running the oracle.
        #[arg(long, short)]
        t: Option<usize>,
        /// Colourings enumerated per edge by colouring-quantified checks.
        #[arg(long, default_value_t = SuiteConfig::default().enumeration_cap)]
        enumeration_cap: usize,
        /// Count a pass over a truncated colouring enumeration as a pass.
        #[arg(long)]
        accept_truncated: bool,
    },
    /// Search a corpus for non-complete double-critical graphs.
    Scan {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: Common,
        /// Scan every connected graph on `--min-order..=N` vertices from the
        /// internal enumerator instead of reading input.
        #[arg(long, value_name = "N", conflicts_with_all = ["graph", "input"])]
        enumerate: Option<usize>,
        /// Smallest order scanned with `--enumerate`.
        #[arg(long, default_value_t = 1, requires = "enumerate")]
        min_order: usize,
        /// Keep only graphs with χ = t.
        #[arg(long, short)]
        t: Option<usize>,
        /// Comma-separated filter ids; always applied in cost order.
        #[arg(long, default_value = "f,j,c,cor15,l25,claim1,i,thm14,a,l23")]
        filters: String,
        /// Reject graphs containing an induced claw.
        #[arg(long)]
        claw_free_only: bool,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Seed for the sampled soundness audit.
        #[arg(long, default_value_t = ScanConfig::default().seed)]
        seed: u64,
    },
    /// Print one graph6 line per connected graph on n vertices, up to isomorphism.
    Enumerate {
        /// Number of vertices (at most 8).
        n: usize,
        /// Also emit every order from this one up to n.
        #[arg(long)]
        from: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color { input, common, k } => cmd_color(&input, &common, k),
        Command::Analyze { input, common, vertex } => cmd_analyze(&input, &common, vertex),
        Command::Check { input, common, checks, t, enumeration_cap, accept_truncated } => {
            cmd_check(&input, &common, checks.as_deref(), t, enumeration_cap, accept_truncated)
        }
        Command::Scan { input, common, enumerate, min_order, t, filters, claw_free_only, workers, seed } => {
            let source = match enumerate {
                Some(n) => Source::Enumerate(min_order, n),
                None => Source::Input(input),
            };
            cmd_scan(source, &common, t, &filters, claw_free_only, workers, seed)
        }
        Command::Enumerate { n, from } => cmd_enumerate(from.unwrap_or(n), n),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("dcgraph: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(format: OutputFormat, value: &Value, text: impl FnOnce(&mut dyn Write) -> io::Result<()>) {
    let mut out = io::stdout().lock();
    let _ = match format {
        OutputFormat::Json => writeln!(out, "{value}"),
        OutputFormat::Text => text(&mut out),
    };
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn cmd_color(input: &InputArgs, common: &Common, k: Option<usize>) -> Result<u8, Failure> {
    let graphs = input.graphs()?;
    let mut engine = ColoringEngine::with_budget(common.budget);
    for Named { label, graph } in &graphs {
        engine.reset_budget();
        let value = match k {
            None => {
                let (chi, c) = engine.chromatic_number(graph).map_err(|e| Failure::budget(label, e))?;
                json!({ "graph": label, "n": graph.order(), "chi": chi, "coloring": c.to_json() })
            }
            Some(k) => {
                let c = engine.k_coloring_within(graph, graph.vertices(), k).map_err(|e| Failure::budget(label, e))?;
                json!({ "graph": label, "n": graph.order(), "k": k, "colorable": c.is_some(), "coloring": c.map(|c| c.to_json()) })
            }
        };
        emit(common.format, &value, |out| {
            match k {
                None => writeln!(out, "{label}: chi = {}", value["chi"])?,
                Some(k) if value["colorable"] == true => writeln!(out, "{label}: {k}-colorable")?,
                Some(k) => writeln!(out, "{label}: not {k}-colorable")?,
            }
            if let Value::Object(m) = &value["coloring"] {
                let parts: Vec<String> = m.iter().map(|(v, c)| format!("{v}:{c}")).collect();
                writeln!(out, "  coloring: {}", parts.join(" "))?;
            }
            Ok(())
        });
    }
    Ok(0)
}

fn analyze(engine: &mut ColoringEngine, label: &str, g: &Graph, vertex: Option<usize>) -> Result<Value, BudgetExhausted> {
    let (chi, coloring) = engine.chromatic_number(g)?;
    let clique = engine.max_clique_within(g, g.vertices())?;
    let independent = engine.max_clique_within(&g.complement(), g.vertices())?;
    let claw = structure::find_claw(g);
    let min_triangles = g.edges().map(|(x, y)| (g.neighbors(x) & g.neighbors(y)).len()).min();
    let centers: Vec<usize> = match vertex {
        Some(v) => vec![v],
        None => g.vertices().iter().filter(|&v| g.degree(v) > 0).collect(),
    };
    let profiles: Vec<Value> = centers
        .into_iter()
        .filter_map(|x| structure::neighborhood_complement_profile(g, x).ok())
        .map(|p| {
            json!({
                "vertex": p.center,
                "degree": p.neighborhood.len(),
                "complement_edges": p.edge_count,
                "complement_degrees": p.degree_multiset(),
                "cycles": p.cycle_lengths(),
                "isolated": p.degrees.iter().filter(|&&d| d == 0).count(),
                "irregular_components": p.irregular_components().count(),
                "conforming": p.conforming,
            })
        })
        .collect();
    Ok(json!({
        "graph": label,
        "n": g.order(),
        "m": g.size(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "connected": g.order() > 0 && g.is_connected().unwrap_or(false),
        "complete": g.is_complete(),
        "claw_free": claw.is_none(),
        "claw": claw,
        "omega": clique.len(),
        "clique": clique,
        "alpha": independent.len(),
        "independent_set": independent,
        "chi": chi,
        "coloring": coloring.to_json(),
        "min_triangles_per_edge": min_triangles,
        "neighborhoods": profiles,
    }))
}

fn cmd_analyze(input: &InputArgs, common: &Common, vertex: Option<usize>) -> Result<u8, Failure> {
    let graphs = input.graphs()?;
    if let Some(v) = vertex {
        if let Some(named) = graphs.iter().find(|n| v >= n.graph.order()) {
            return Err(Failure::input(format!("{}: vertex {v} out of range", named.label)));
        }
    }
    let mut engine = ColoringEngine::with_budget(common.budget);
    for Named { label, graph } in &graphs {
        engine.reset_budget();
        let value = analyze(&mut engine, label, graph, vertex).map_err(|e| Failure::budget(label, e))?;
        emit(common.format, &value, |out| {
            let Value::Object(m) = &value else { unreachable!() };
            writeln!(out, "{label}")?;
            for (key, v) in m.iter().filter(|(k, _)| !matches!(k.as_str(), "graph" | "neighborhoods")) {
                writeln!(out, "  {key} = {}", scalar(v))?;
            }
            for p in value["neighborhoods"].as_array().into_iter().flatten() {
                writeln!(
                    out,
                    "  N({}): degree {}, complement edges {}, degrees {}, cycles {}, isolated {}, irregular {}, conforming {}",
                    p["vertex"], p["degree"], p["complement_edges"], p["complement_degrees"], p["cycles"], p["isolated"], p["irregular_components"], p["conforming"]
                )?;
            }
            Ok(())
        });
    }
    Ok(0)
}

fn parse_checks(list: Option<&str>) -> Result<Vec<CheckId>, Failure> {
    let Some(list) = list else { return Ok(CheckId::all().collect()) };
    let ids: Vec<CheckId> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|e: dcgraph::properties::UnknownCheck| Failure::input(e.to_string())))
        .collect::<Result<_, _>>()?;
    let instance_only = [CheckId::ClawFreeEightBNotCompleteToC, CheckId::ClawFreeEightCTriangle, CheckId::ClawFreeEightAbMatching];
    if let Some(id) = ids.iter().find(|id| instance_only.contains(id)) {
        return Err(Failure::input(format!("{id} needs an explicit edge and colouring and has no graph-level form")));
    }
    if ids.is_empty() {
        return Err(Failure::input("empty check list".into()));
    }
    Ok(ids)
}

fn check_exit(reports: &[PropertyReport]) -> u8 {
    if reports.iter().any(PropertyReport::any_failed) {
        1
    } else if reports.iter().any(PropertyReport::any_inconclusive) {
        3
    } else {
        0
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::VacuousPass => "vacuous",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn cmd_check(input: &InputArgs, common: &Common, checks: Option<&str>, t: Option<usize>, cap: usize, accept_truncated: bool) -> Result<u8, Failure> {
    let ids = parse_checks(checks)?;
    if cap == 0 {
        return Err(Failure::input("--enumeration-cap must be positive".into()));
    }
    let graphs = input.graphs()?;
    let mut suite = PropertySuite::new(SuiteConfig { enumeration_cap: cap, accept_truncated, budget: common.budget });
    let mut reports = Vec::new();
    for Named { label, graph } in &graphs {
        suite.engine().reset_budget();
        let report = match t {
            Some(t) => suite.run_with_premise(graph, &Premise::assumed(graph, t), &ids),
            None => {
                let v = suite.oracle(graph).map_err(|e| match e {
                    dcgraph::properties::OracleError::Budget(b) => Failure::budget(label, b),
                    other => Failure::input(format!("{label}: {other}")),
                })?;
                let p = Premise::from_verdict(graph, &v);
                let mut r = suite.run_with_premise(graph, &p, &ids);
                r.verdict = Some(v);
                r
            }
        };
        let value = serde_json::to_value(&report).expect("report serializes");
        emit(common.format, &value, |out| {
            let p = &report.premise;
            writeln!(out, "{label}: t = {}, premise {:?}, connected {}, complete {}, claw-free {}, double-critical {}", p.t, p.source, p.connected, p.complete, p.claw_free, p.double_critical)?;
            for o in &report.outcomes {
                let witness = o.witness.as_ref().map(|w| serde_json::to_string(w).expect("witness serializes")).unwrap_or_default();
                let mut line = format!("  {:<6} {:<32} {:<12} applicable={:<5} cost={}", o.id.short(), o.id.name(), verdict_name(o.verdict), o.applicable, o.cost);
                if o.truncated {
                    line.push_str(" truncated");
                }
                if !witness.is_empty() {
                    line.push_str(&format!(" witness={witness}"));
                }
                if let Some(note) = &o.note {
                    line.push_str(&format!(" note=\"{note}\""));
                }
                writeln!(out, "{line}")?;
            }
            Ok(())
        });
        reports.push(report);
    }
    Ok(check_exit(&reports))
}

enum Source {
    Input(InputArgs),
    Enumerate(usize, usize),
}

fn cost_ordered(list: &str) -> Result<Vec<FilterId>, Failure> {
    let mut filters = FilterId::parse_list(list).map_err(|e| Failure::input(e.to_string()))?;
    filters.sort_by_key(|f| FilterId::COST_ORDER.iter().position(|g| g == f));
    filters.dedup();
    Ok(filters)
}

fn cmd_scan(source: Source, common: &Common, t: Option<usize>, filters: &str, claw_free_only: bool, workers: usize, seed: u64) -> Result<u8, Failure> {
    let cfg = ScanConfig {
        t_mode: t.map_or(TMode::Chromatic, TMode::Fixed),
        filters: cost_ordered(filters)?,
        claw_free_only,
        budget: common.budget,
        workers,
        seed,
        ..ScanConfig::default()
    };
    if common.budget == Some(0) {
        return Err(Failure::input("--budget must be positive".into()));
    }
    let report = match source {
        Source::Enumerate(lo, hi) => {
            if lo == 0 || lo > hi {
                return Err(Failure::input(format!("empty order range {lo}..={hi}")));
            }
            search::scan_enumerated(lo, hi, cfg).map_err(|e| Failure::input(e.to_string()))?
        }
        Source::Input(input) => search::scan_stream(input.reader()?, cfg).map_err(|e| Failure::input(e.to_string()))?,
    };
    for m in &report.malformed {
        eprintln!("dcgraph: skipped line {} (byte {}): {}", m.line, m.offset, m.message);
    }
    let value = serde_json::to_value(&report).expect("report serializes");
    emit(common.format, &value, |out| scan_text(out, &report));
    Ok(report.exit_code() as u8)
}

fn scan_text(out: &mut dyn Write, r: &ScanReport) -> io::Result<()> {
    writeln!(out, "graphs seen: {}", r.graphs_seen)?;
    writeln!(out, "malformed: {}", r.malformed.len())?;
    writeln!(out, "rejections:")?;
    for (key, n) in &r.rejections {
        writeln!(out, "  {key}: {n}")?;
    }
    writeln!(out, "complete shortcut: {}", r.complete_shortcut)?;
    writeln!(out, "oracle calls: {}", r.oracle_calls)?;
    writeln!(out, "budget exhausted: {}", r.budget_exhausted.len())?;
    for g in &r.budget_exhausted {
        writeln!(out, "  {g}")?;
    }
    writeln!(out, "survivors: {} ({} non-complete)", r.survivors.len(), r.counterexamples().count())?;
    for s in &r.survivors {
        writeln!(out, "  {} n={} t={} {}", s.graph6, s.n, s.t, if s.complete { "complete" } else { "NON-COMPLETE" })?;
    }
    writeln!(out, "audit: checked {}, inconclusive {}, violations {}", r.audit.checked, r.audit.inconclusive, r.audit.violations.len())?;
    for v in &r.audit.violations {
        writeln!(out, "  {v}")?;
    }
    writeln!(out, "wall time: {:.3} s", r.wall_time_secs)
}

fn cmd_enumerate(lo: usize, hi: usize) -> Result<u8, Failure> {
    if lo == 0 || lo > hi || hi > MAX_ENUMERATION_ORDER {
        return Err(Failure::input(format!("orders {lo}..={hi} outside 1..={MAX_ENUMERATION_ORDER}")));
    }
    let mut out = io::BufWriter::new(io::stdout().lock());
    for n in lo..=hi {
        for g in search::enumerate_connected_graphs(n).map_err(|e| Failure::input(e.to_string()))? {
            if writeln!(out, "{}", graph6::encode_graph6(&g)).is_err() {
                return Ok(0);
            }
        }
    }
    let _ = out.flush();
    Ok(0)
}
