mod common;

use std::collections::HashSet;

use proptest::prelude::*;

use dcgraph::coloring::{chromatic_number, enumerate_colorings, independence_number, max_clique};
use dcgraph::graph6::{self, Format};
use dcgraph::properties::{CheckId, Premise, PropertySuite, Verdict};
use dcgraph::search::{canonical_form, filter_pipeline, scan_graphs, FilterId, FilterOutcome, ScanConfig};
use dcgraph::structure;
use dcgraph::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            // bit k encodes the pair (i, j), i < j, in column order
            Graph::from_fn(n, |i, j| {
                let (i, j) = (i.min(j), i.max(j));
                bits[j * (j - 1) / 2 + i]
            })
            .unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.order() > 0 && g.is_connected().unwrap())
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// graph6 decoder written from the format description, independent of the
/// library's bit reader.
fn reference_graph6(s: &str) -> Graph {
    let bytes: Vec<u8> = s.bytes().map(|b| b - 63).collect();
    let (n, rest) = if bytes[0] < 63 {
        (bytes[0] as usize, &bytes[1..])
    } else if bytes[1] < 63 {
        (((bytes[1] as usize) << 12) | ((bytes[2] as usize) << 6) | bytes[3] as usize, &bytes[4..])
    } else {
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | b as usize);
        (n, &bytes[8..])
    };
    let bits: Vec<bool> = rest.iter().flat_map(|&b| (0..6).rev().map(move |k| b >> k & 1 == 1)).collect();
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let s = graph6::encode_graph6(&g);
        prop_assert_eq!(graph6::parse(&s).unwrap(), g.clone());
        prop_assert_eq!(reference_graph6(&s), g.clone());
        prop_assert_eq!(graph6::detect(s.as_bytes()), Format::Graph6);
    }

    #[test]
    fn sparse6_round_trip(g in graph(64)) {
        let s = graph6::encode_sparse6(&g);
        prop_assert!(s.starts_with(':'));
        prop_assert_eq!(graph6::parse(&s).unwrap(), g);
    }

    #[test]
    fn complement_and_counts(g in graph(20)) {
        let n = g.order();
        let co = g.complement();
        prop_assert_eq!(co.complement(), g.clone());
        prop_assert_eq!(g.size() + co.size(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn edges_between_counts_each_edge_once(g in graph(12), a in any::<u16>(), b in any::<u16>()) {
        let full = g.vertices();
        let a = VertexSet::from_bits(a as u64) & full;
        let b = VertexSet::from_bits(b as u64) & full;
        let brute = g.edges().filter(|&(u, v)| (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))).count();
        prop_assert_eq!(g.edges_between(a, b), brute);
        prop_assert_eq!(g.edges_between(a, b), g.edges_between(b, a));
    }

    #[test]
    fn chromatic_number_matches_naive(g in graph(7)) {
        let (chi, c) = chromatic_number(&g);
        prop_assert_eq!(chi, common::naive_chromatic(&g));
        prop_assert!(c.verify_on(&g, g.vertices(), chi).is_ok());
        let omega = max_clique(&g).len();
        prop_assert_eq!(omega, common::brute_clique_number(&g));
        prop_assert!(omega <= chi);
        prop_assert!(chi <= g.max_degree().map_or(0, |d| d + 1));
        prop_assert_eq!(independence_number(&g).len(), common::brute_independence_number(&g));
    }

    #[test]
    fn coloring_enumeration_matches_brute_force(g in graph(6), k in 1usize..=4) {
        let all = enumerate_colorings(&g, k, 100_000);
        prop_assert!(!all.truncated);
        prop_assert_eq!(all.colorings.len(), common::brute_coloring_count(&g, k));
        let distinct: HashSet<_> = all.colorings.iter().collect();
        prop_assert_eq!(distinct.len(), all.colorings.len());
        for c in &all.colorings {
            prop_assert!(c.is_canonical());
            prop_assert!(c.verify_on(&g, g.vertices(), k).is_ok());
        }
    }

    #[test]
    fn claw_detection_matches_brute_force(g in graph(9)) {
        prop_assert_eq!(structure::is_claw_free(&g), common::brute_claw_free(&g));
        if let Some(w) = structure::find_claw(&g) {
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(8)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(common::brute_isomorphic(&g, &canonical_form(&g)));
    }

    #[test]
    fn oracle_matches_definition(g in connected_graph(6)) {
        let v = dcgraph::properties::double_critical_oracle(&g).unwrap();
        prop_assert_eq!(v.is_double_critical, common::brute_double_critical(&g));
        prop_assert_eq!(v.t, common::naive_chromatic(&g));
    }

    #[test]
    fn filter_order_does_not_change_survival((g, seed) in (connected_graph(8), any::<u64>())) {
        let t = chromatic_number(&g).0;
        let mut order = FilterId::COST_ORDER.to_vec();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut suite = PropertySuite::default();
        let a = matches!(filter_pipeline(&mut suite, &g, t, &FilterId::COST_ORDER), FilterOutcome::Survive);
        let b = matches!(filter_pipeline(&mut suite, &g, t, &order), FilterOutcome::Survive);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn failure_witnesses_reverify(g in connected_graph(7)) {
        let t = chromatic_number(&g).0;
        let p = Premise::assumed(&g, t);
        let mut suite = PropertySuite::default();
        let report = suite.run_with_premise(&g, &p, &CheckId::GRAPH_LEVEL);
        for o in &report.outcomes {
            if o.verdict == Verdict::Fail {
                let w = o.witness.as_ref().expect("failure carries a witness");
                prop_assert!(w.reverify(&g, t), "{} witness {:?} does not reverify on {}", o.id, w, g);
            }
            if !o.applicable {
                prop_assert_eq!(o.verdict, Verdict::VacuousPass);
            }
        }
    }

    #[test]
    fn scan_does_not_depend_on_worker_count(gs in proptest::collection::vec(graph(7), 0..40)) {
        let one = scan_graphs(gs.clone(), ScanConfig { workers: 1, ..ScanConfig::default() });
        let four = scan_graphs(gs, ScanConfig { workers: 4, ..ScanConfig::default() });
        prop_assert_eq!(&one.rejections, &four.rejections);
        prop_assert_eq!(&one.survivors, &four.survivors);
        prop_assert_eq!(&one.audit, &four.audit);
        prop_assert!(one.is_accounted());
    }
}
