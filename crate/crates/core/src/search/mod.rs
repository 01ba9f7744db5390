//! Corpus scans for non-complete double-critical graphs.
//!
//! Each graph passes through the cheap filters of [`filters`] in order and
//! only the survivors reach the oracle. Graphs are processed in parallel in
//! fixed-size chunks, one [`PropertySuite`] (and so one colouring engine) per
//! worker; per-graph results are merged in input order, so the report does
//! not depend on scheduling.

pub mod enumerate;
pub mod filters;

use std::collections::BTreeMap;
use std::io::BufRead;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6;
use crate::properties::{double_critical_oracle, every_edge_drops_by_two, PropertySuite, SuiteConfig};
use crate::structure;

pub use enumerate::{canonical_form, canonical_labeling, enumerate_connected_graphs, EnumerationTooLarge, MAX_ENUMERATION_ORDER};
pub use filters::{filter_pipeline, FilterId, FilterOutcome};

const CHUNK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TMode {
    /// t = χ(G), computed once per graph.
    Chromatic,
    /// Only graphs with χ(G) = t are of interest; others are rejected.
    Fixed(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub t_mode: TMode,
    /// Applied in this order.
    pub filters: Vec<FilterId>,
    /// Reject graphs containing an induced claw before anything else.
    pub claw_free_only: bool,
    /// Colouring-engine nodes per graph, shared by χ, filters and oracle.
    pub budget: Option<u64>,
    /// 0 means one per available core.
    pub workers: usize,
    /// Rejected graphs with at most this many vertices are always re-checked
    /// by the oracle.
    pub audit_all_up_to: usize,
    /// Probability of re-checking a larger rejected graph.
    pub audit_rate: f64,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            t_mode: TMode::Chromatic,
            filters: FilterId::COST_ORDER.to_vec(),
            claw_free_only: false,
            budget: None,
            workers: 0,
            audit_all_up_to: 7,
            audit_rate: 0.1,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Malformed {
    pub line: usize,
    pub offset: u64,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Survivor {
    pub graph6: String,
    pub n: usize,
    pub t: usize,
    pub complete: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    /// Rejected graphs re-checked by the oracle.
    pub checked: u64,
    /// Re-checks that ran out of budget.
    pub inconclusive: u64,
    /// Rejected graphs the oracle found double-critical, as `filter: graph6`.
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub graphs_seen: u64,
    pub malformed: Vec<Malformed>,
    /// Keyed by filter id, plus `empty`, `disconnected`, `claw` and
    /// `chi_mismatch` for graphs turned away before the filters.
    pub rejections: BTreeMap<String, u64>,
    /// Complete graphs, accepted without running the oracle.
    pub complete_shortcut: u64,
    /// Oracle runs that finished.
    pub oracle_calls: u64,
    /// graph6 of every graph that exhausted its budget somewhere.
    pub budget_exhausted: Vec<String>,
    pub survivors: Vec<Survivor>,
    pub audit: Audit,
    pub wall_time_secs: f64,
}

impl ScanReport {
    /// Survivors that are not complete graphs.
    pub fn counterexamples(&self) -> impl Iterator<Item = &Survivor> {
        self.survivors.iter().filter(|s| !s.complete)
    }

    /// Every graph seen is a rejection, a complete shortcut, an oracle call
    /// or an exhausted budget.
    pub fn is_accounted(&self) -> bool {
        let total = self.rejections.values().sum::<u64>()
            + self.complete_shortcut
            + self.oracle_calls
            + self.budget_exhausted.len() as u64;
        total == self.graphs_seen
    }

    /// 1 for a counterexample or a soundness violation, 3 for any exhausted
    /// budget, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.counterexamples().next().is_some() || !self.audit.violations.is_empty() {
            1
        } else if !self.budget_exhausted.is_empty() || self.audit.inconclusive > 0 {
            3
        } else {
            0
        }
    }

    fn reject(&mut self, key: &str) {
        *self.rejections.entry(key.to_string()).or_default() += 1;
    }
}

enum GraphResult {
    Rejected { key: String, audit: Option<AuditResult> },
    Complete { t: usize },
    Exhausted,
    OracleDone { double_critical: bool, t: usize },
}

enum AuditResult {
    Clean,
    Violation,
    Inconclusive,
}

fn audit_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn process(suite: &mut PropertySuite, cfg: &ScanConfig, index: u64, g: &Graph) -> GraphResult {
    suite.engine().reset_budget();
    let rejected = |key: &str| GraphResult::Rejected { key: key.to_string(), audit: None };
    if g.order() == 0 {
        return rejected("empty");
    }
    if !g.is_connected().expect("nonempty") {
        return rejected("disconnected");
    }
    if cfg.claw_free_only && !structure::is_claw_free(g) {
        return rejected("claw");
    }
    if g.is_complete() {
        return match cfg.t_mode {
            TMode::Fixed(t) if t != g.order() => rejected("chi_mismatch"),
            _ => GraphResult::Complete { t: g.order() },
        };
    }
    let t = match suite.engine().chromatic_number(g) {
        Ok((chi, _)) => chi,
        Err(_) => return GraphResult::Exhausted,
    };
    if matches!(cfg.t_mode, TMode::Fixed(ft) if ft != t) {
        return rejected("chi_mismatch");
    }
    match filter_pipeline(suite, g, t, &cfg.filters) {
        FilterOutcome::Reject { filter, .. } => {
            let sampled = g.order() <= cfg.audit_all_up_to
                || ChaCha8Rng::seed_from_u64(audit_seed(cfg.seed, index)).gen_bool(cfg.audit_rate.clamp(0.0, 1.0));
            let audit = sampled.then(|| {
                suite.engine().reset_budget();
                match every_edge_drops_by_two(suite.engine(), g, t) {
                    Ok(true) => AuditResult::Violation,
                    Ok(false) => AuditResult::Clean,
                    Err(_) => AuditResult::Inconclusive,
                }
            });
            GraphResult::Rejected { key: filter.short().to_string(), audit }
        }
        FilterOutcome::Exhausted { .. } => GraphResult::Exhausted,
        FilterOutcome::Survive => match every_edge_drops_by_two(suite.engine(), g, t) {
            Ok(double_critical) => GraphResult::OracleDone { double_critical, t },
            Err(_) => GraphResult::Exhausted,
        },
    }
}

/// Stateful scanner: feed graphs in order, then [`finish`](Scanner::finish).
pub struct Scanner {
    cfg: ScanConfig,
    pool: rayon::ThreadPool,
    report: ScanReport,
    pending: Vec<Graph>,
    started: Instant,
}

impl Scanner {
    pub fn new(cfg: ScanConfig) -> Self {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().expect("thread pool");
        Scanner { cfg, pool, report: ScanReport::default(), pending: Vec::with_capacity(CHUNK), started: Instant::now() }
    }

    pub fn push(&mut self, g: Graph) {
        self.pending.push(g);
        if self.pending.len() == CHUNK {
            self.flush();
        }
    }

    pub fn malformed(&mut self, m: Malformed) {
        self.report.malformed.push(m);
    }

    fn flush(&mut self) {
        let batch = std::mem::take(&mut self.pending);
        let base = self.report.graphs_seen;
        let cfg = &self.cfg;
        let suite_cfg = SuiteConfig { budget: cfg.budget, ..SuiteConfig::default() };
        let results: Vec<GraphResult> = self.pool.install(|| {
            batch
                .par_iter()
                .enumerate()
                .map_init(|| PropertySuite::new(suite_cfg.clone()), |suite, (i, g)| process(suite, cfg, base + i as u64, g))
                .collect()
        });
        for (g, r) in batch.iter().zip(results) {
            let r6 = || graph6::encode_graph6(g);
            self.report.graphs_seen += 1;
            match r {
                GraphResult::Rejected { key, audit } => {
                    self.report.reject(&key);
                    match audit {
                        None => {}
                        Some(a) => {
                            self.report.audit.checked += 1;
                            match a {
                                AuditResult::Clean => {}
                                AuditResult::Violation => self.report.audit.violations.push(format!("{key}: {}", r6())),
                                AuditResult::Inconclusive => self.report.audit.inconclusive += 1,
                            }
                        }
                    }
                }
                GraphResult::Complete { t } => {
                    self.report.complete_shortcut += 1;
                    self.report.survivors.push(Survivor { graph6: r6(), n: g.order(), t, complete: true });
                }
                GraphResult::Exhausted => self.report.budget_exhausted.push(r6()),
                GraphResult::OracleDone { double_critical, t } => {
                    self.report.oracle_calls += 1;
                    if double_critical {
                        self.report.survivors.push(Survivor { graph6: r6(), n: g.order(), t, complete: false });
                    }
                }
            }
        }
        self.pending = batch;
        self.pending.clear();
    }

    /// Re-verify every survivor with the unbudgeted full oracle on this
    /// thread and return the report.
    pub fn finish(mut self) -> ScanReport {
        if !self.pending.is_empty() {
            self.flush();
        }
        for s in &self.report.survivors {
            let g = graph6::parse(&s.graph6).expect("own encoding");
            let v = double_critical_oracle(&g).expect("survivors are nonempty");
            assert!(
                v.is_double_critical && v.t == s.t && v.complete == s.complete,
                "survivor {} failed re-verification",
                s.graph6
            );
        }
        self.report.survivors.sort();
        self.report.wall_time_secs = self.started.elapsed().as_secs_f64();
        self.report
    }
}

/// Scan a graph6 / sparse6 stream. Malformed lines are recorded and skipped.
pub fn scan_stream<R: BufRead>(input: R, cfg: ScanConfig) -> std::io::Result<ScanReport> {
    let mut scanner = Scanner::new(cfg);
    for rec in graph6::records(input) {
        let rec = rec?;
        match rec.graph {
            Ok(g) => scanner.push(g),
            Err(e) => scanner.malformed(Malformed { line: rec.line, offset: rec.offset, message: e.to_string() }),
        }
    }
    Ok(scanner.finish())
}

pub fn scan_graphs(graphs: impl IntoIterator<Item = Graph>, cfg: ScanConfig) -> ScanReport {
    let mut scanner = Scanner::new(cfg);
    graphs.into_iter().for_each(|g| scanner.push(g));
    scanner.finish()
}

/// Scan every connected graph with `lo..=hi` vertices from the internal
/// enumerator.
pub fn scan_enumerated(lo: usize, hi: usize, cfg: ScanConfig) -> Result<ScanReport, EnumerationTooLarge> {
    let mut scanner = Scanner::new(cfg);
    for n in lo..=hi {
        enumerate_connected_graphs(n)?.into_iter().for_each(|g| scanner.push(g));
    }
    Ok(scanner.finish())
}
