//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so every criterion reports even when an earlier one fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dcgraph::coloring::{chromatic_number, enumerate_colorings_within, independence_number, max_clique};
use dcgraph::families;
use dcgraph::properties::{double_critical_oracle, CheckId, Premise, PropertySuite, Verdict, Witness};
use dcgraph::search::{canonical_form, enumerate_connected_graphs, filter_pipeline, scan_enumerated, FilterId, FilterOutcome, ScanConfig};
use dcgraph::structure::{self, ComponentShape};
use dcgraph::Graph;

type Criterion = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn complete_graphs_are_double_critical() -> Result<String, String> {
    let mut slowest = Duration::ZERO;
    for t in 3..=9 {
        let start = Instant::now();
        let v = double_critical_oracle(&families::complete(t)).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure!(v.is_double_critical && v.t == t, "K_{t}: oracle says {v:?}");
        ensure!(took < Duration::from_secs(1), "K_{t} took {took:?}");
        slowest = slowest.max(took);
    }
    Ok(format!("K_3..K_9 double-critical, slowest call {slowest:?}"))
}

fn corpus() -> Vec<Graph> {
    (1..=8).flat_map(|n| enumerate_connected_graphs(n).unwrap()).collect()
}

fn conjecture_audit() -> Result<String, String> {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
    ensure!(counts == [1, 1, 2, 6, 21, 112, 853, 11117], "corpus sizes {counts:?}");
    let r = scan_enumerated(1, 8, ScanConfig::default()).map_err(|e| e.to_string())?;
    ensure!(r.graphs_seen == counts.iter().sum::<usize>() as u64, "saw {} graphs", r.graphs_seen);
    ensure!(r.is_accounted(), "report does not account for every graph");
    ensure!(r.counterexamples().next().is_none(), "non-complete survivors: {:?}", r.counterexamples().collect::<Vec<_>>());
    ensure!(r.budget_exhausted.is_empty(), "budget exhausted on {:?}", r.budget_exhausted);
    ensure!(r.audit.violations.is_empty(), "soundness violations {:?}", r.audit.violations);
    ensure!(r.survivors.len() == 8, "expected K_1..K_8 as survivors, got {:?}", r.survivors);
    Ok(format!(
        "{} graphs, {} oracle calls, {} rejections re-checked by the oracle, 0 non-complete survivors, {:.1}s",
        r.graphs_seen, r.oracle_calls, r.audit.checked, r.wall_time_secs
    ))
}

fn filter_soundness() -> Result<String, String> {
    let mut suite = PropertySuite::default();
    let mut rejections = 0usize;
    for g in (1..=7).flat_map(|n| enumerate_connected_graphs(n).unwrap()) {
        if g.is_complete() {
            continue;
        }
        let v = double_critical_oracle(&g).map_err(|e| e.to_string())?;
        let mut brute = None;
        for f in FilterId::COST_ORDER {
            if let FilterOutcome::Reject { .. } = filter_pipeline(&mut suite, &g, v.t, &[f]) {
                rejections += 1;
                ensure!(!v.is_double_critical, "filter {f} rejected double-critical {g}");
                let dc = *brute.get_or_insert_with(|| common::brute_double_critical(&g));
                ensure!(!dc, "filter {f} rejected {g}, double-critical by brute force");
            }
        }
    }
    let audited = scan_enumerated(1, 7, ScanConfig::default()).map_err(|e| e.to_string())?;
    let filter_rejections: u64 = FilterId::COST_ORDER.iter().filter_map(|f| audited.rejections.get(f.short())).sum();
    ensure!(audited.audit.checked == filter_rejections, "scan audited {} of {filter_rejections}", audited.audit.checked);
    ensure!(audited.audit.violations.is_empty(), "scan audit violations {:?}", audited.audit.violations);
    Ok(format!("{rejections} (graph, filter) rejections on n <= 7, all confirmed non-double-critical"))
}

fn engine_matches_naive_search() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..500 {
        let n = rng.gen_range(1..=8);
        let p: f64 = rng.gen();
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
        let (chi, coloring) = chromatic_number(&g);
        let naive = common::naive_chromatic(&g);
        ensure!(chi == naive, "graph #{i} {g}: engine {chi}, naive {naive}");
        ensure!(coloring.verify_on(&g, g.vertices(), chi).is_ok(), "graph #{i}: bad witness coloring");
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(60), "took {took:?}");
    Ok(format!("500 random graphs agree, {took:?}"))
}

fn structural_controls() -> Result<String, String> {
    let mut suite = PropertySuite::default();
    let mut colorings = 0;
    for t in 5..=8 {
        let g = families::complete(t);
        let v = double_critical_oracle(&g).unwrap();
        let p = Premise::from_verdict(&g, &v);
        for id in [CheckId::RainbowPaths, CheckId::CommonNeighborPerClass] {
            let o = suite.run_check(&g, &p, id).unwrap();
            ensure!(o.applicable && o.verdict == Verdict::Pass && !o.truncated, "K_{t} {id}: {o:?}");
        }
        for (x, y) in g.edges() {
            let domain = g.vertices().without(x).without(y);
            let all = enumerate_colorings_within(&g, domain, t - 2, 1000);
            ensure!(!all.truncated && all.colorings.len() == 1, "K_{t}: {} colorings", all.colorings.len());
            for c in &all.colorings {
                colorings += 1;
                let o = suite.common_neighbors(&g, &p, x, y, c).map_err(|e| e.to_string())?;
                ensure!(o.verdict == Verdict::Pass, "K_{t} common neighbours at {x}-{y}: {o:?}");
                let seq: Vec<usize> = (1..=t - 2).rev().collect();
                let o = suite.rainbow_path(&g, &p, x, y, c, &seq).map_err(|e| e.to_string())?;
                ensure!(o.verdict == Verdict::Pass, "K_{t} rainbow path at {x}-{y}: {o:?}");
            }
        }
    }
    let star = structure::neighborhood_complement_profile(&families::star(3), 0).unwrap();
    ensure!(!star.conforming, "K_1,3 centre accepted");
    ensure!(
        star.components.iter().any(|c| c.shape == ComponentShape::Cycle { length: 3 }),
        "K_1,3 centre: {:?}",
        star.components
    );
    let c5 = families::join(&families::empty(1), &families::cycle(5).complement());
    let prof = structure::neighborhood_complement_profile(&c5, 0).unwrap();
    ensure!(prof.conforming && prof.cycle_lengths() == [5], "synthetic H = C_5 rejected: {:?}", prof.components);
    Ok(format!("{colorings} colorings of K_5..K_8 checked; profiler controls correct"))
}

fn known_values() -> Result<String, String> {
    let p = families::petersen();
    let cases = [
        ("Petersen chi", chromatic_number(&p).0, common::naive_chromatic(&p), 3),
        ("Petersen omega", max_clique(&p).len(), common::brute_clique_number(&p), 2),
        ("Petersen alpha", independence_number(&p).len(), common::brute_independence_number(&p), 4),
        ("Petersen claw-free", structure::is_claw_free(&p) as usize, common::brute_claw_free(&p) as usize, 0),
        ("Grotzsch chi", chromatic_number(&families::grotzsch()).0, common::naive_chromatic(&families::grotzsch()), 4),
    ];
    for (name, engine, brute, expected) in cases {
        ensure!(engine == expected && brute == expected, "{name}: engine {engine}, brute force {brute}, expected {expected}");
    }
    let c5 = families::cycle(5);
    ensure!(canonical_form(&c5) == canonical_form(&c5.complement()), "C_5 not self-complementary");
    ensure!(common::brute_isomorphic(&c5, &c5.complement()), "brute force: C_5 not self-complementary");
    Ok("Petersen 3/2/4/claw, Grotzsch 4, C_5 self-complementary".into())
}

fn high_t_checkers_vacuous_and_mutations_fail() -> Result<String, String> {
    let ids = [CheckId::DegreeTPlusOneNeighbors, CheckId::DegreeTPlusOneIsolation, CheckId::ClawFreeEightRegular];
    let mut suite = PropertySuite::default();
    let graphs = corpus();
    for g in &graphs {
        let v = double_critical_oracle(g).unwrap();
        let p = Premise::from_verdict(g, &v);
        for id in ids {
            let o = suite.run_check(g, &p, id).unwrap();
            ensure!(!o.applicable && o.verdict == Verdict::VacuousPass, "{id} applicable on {g}");
        }
    }

    // K_6 plus two vertices joined to 0 and 1: χ = 6 and 0, 1 are adjacent with degree t + 1
    let mut edges: Vec<(usize, usize)> = families::complete(6).edges().collect();
    edges.extend([(0, 6), (1, 6), (0, 7), (1, 7)]);
    let g = Graph::from_edges(8, &edges).unwrap();
    ensure!(chromatic_number(&g).0 == 6, "mutation is not 6-chromatic");
    let mock = Premise::assumed(&g, 6);
    let cor = suite.run_check(&g, &mock, CheckId::DegreeTPlusOneIsolation).unwrap();
    ensure!(
        cor.verdict == Verdict::Fail && cor.witness == Some(Witness::AdjacentDegrees { x: 0, y: 1, dx: 7, dy: 7 }),
        "isolation check on mutation: {cor:?}"
    );
    let thm = suite.run_check(&g, &mock, CheckId::DegreeTPlusOneNeighbors).unwrap();
    ensure!(thm.verdict == Verdict::Fail && thm.witness.as_ref().is_some_and(|w| w.reverify(&g, 6)), "neighbour check on mutation: {thm:?}");

    // K_9 minus an edge: claw-free, 8-chromatic, not 10-regular
    let h = Graph::from_fn(9, |a, b| (a, b) != (0, 1) && (a, b) != (1, 0)).unwrap();
    ensure!(chromatic_number(&h).0 == 8 && structure::is_claw_free(&h), "K_9 - e setup");
    let claim = suite.run_check(&h, &Premise::assumed(&h, 8), CheckId::ClawFreeEightRegular).unwrap();
    ensure!(claim.verdict == Verdict::Fail && claim.witness.as_ref().is_some_and(|w| w.reverify(&h, 8)), "regularity check on mutation: {claim:?}");

    for (m, t) in [(&g, 6), (&h, 8)] {
        let v = double_critical_oracle(m).unwrap();
        ensure!(v.t == t && !v.is_double_critical, "mutation unexpectedly double-critical");
        let p = Premise::from_verdict(m, &v);
        for id in ids {
            ensure!(suite.run_check(m, &p, id).unwrap().is_vacuous(), "{id} applicable under the oracle premise");
        }
    }
    Ok(format!("vacuous on all {} corpus graphs; mock premises fail all three", graphs.len()))
}

fn main() {
    let criteria: [(&str, Criterion); 7] = [
        ("1 complete graphs double-critical", complete_graphs_are_double_critical),
        ("2 conjecture audit n <= 8", conjecture_audit),
        ("3 filter soundness n <= 7", filter_soundness),
        ("4 engine vs naive search", engine_matches_naive_search),
        ("5 structural controls", structural_controls),
        ("6 known values", known_values),
        ("7 premise gating and mutations", high_t_checkers_vacuous_and_mutations_fail),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in criteria {
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
