mod common;

use dcgraph::coloring::{enumerate_colorings_within, Coloring};
use dcgraph::families;
use dcgraph::properties::{self, double_critical_oracle, reduce_dominating_vertex, CheckId, Premise, PropertySuite, Verdict, Witness};
use dcgraph::search::{filter_pipeline, FilterId, FilterOutcome};
use dcgraph::{Graph, GraphError, VertexSet};

fn oracle_premise(g: &Graph) -> Premise {
    Premise::from_verdict(g, &double_critical_oracle(g).unwrap())
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

#[test]
fn dominating_reduction_of_k7_is_k6() {
    let g = families::complete(7);
    let h = reduce_dominating_vertex(&g, 3).unwrap();
    assert_eq!(h, families::complete(6));
    let v = double_critical_oracle(&h).unwrap();
    assert!(v.is_double_critical);
    assert_eq!(v.t, 6);
    let mut suite = PropertySuite::default();
    let o = suite.run_check(&g, &oracle_premise(&g), CheckId::DominatingVertexReduction).unwrap();
    assert!(o.applicable);
    assert_eq!(o.verdict, Verdict::Pass);
}

#[test]
fn dominating_reduction_star_and_wheel_are_vacuous() {
    let star = families::star(4);
    let center = star.vertices().iter().find(|&v| star.is_dominating(v)).unwrap();
    assert_eq!(reduce_dominating_vertex(&star, center).unwrap(), families::empty(4));
    assert!(matches!(reduce_dominating_vertex(&star, (center + 1) % 5), Err(GraphError::NotDominating(_))));

    let wheel = families::wheel(5);
    let hub = wheel.vertices().iter().find(|&v| wheel.is_dominating(v)).unwrap();
    assert!(common::brute_isomorphic(&reduce_dominating_vertex(&wheel, hub).unwrap(), &families::cycle(5)));

    let mut suite = PropertySuite::default();
    for g in [star, wheel] {
        assert!(!common::brute_double_critical(&g));
        let o = suite.run_check(&g, &oracle_premise(&g), CheckId::DominatingVertexReduction).unwrap();
        assert!(!o.applicable);
        assert_eq!(o.verdict, Verdict::VacuousPass);
    }
}

/// x = 0, y = 1, colour classes V_1 = {2, 4, 5, 6}, V_2 = {3, 7} with t = 4.
/// N(x) ∩ N(y) ∩ V_1 = {2} sees nothing of N(x) ∩ V_2 = {3}, and the only
/// edge from (N(y) \ N(x)) ∩ V_1 = {4, 5} into {3} is 4–3.
#[test]
fn kempe_instance_with_single_qualifying_edge() {
    let edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (1, 5), (3, 4), (2, 7), (5, 7), (6, 7)];
    let g = Graph::from_edges(8, &edges).unwrap();
    let c = Coloring::from_classes([set(&[2, 4, 5, 6]), set(&[3, 7])]);
    let target = g.neighbors(0) & set(&[3, 7]);
    let source = (g.neighbors(1) - g.neighbors(0)) & set(&[2, 4, 5, 6]);
    let qualifying: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| (source.contains(u) && target.contains(v)) || (source.contains(v) && target.contains(u))).collect();
    assert_eq!(qualifying, vec![(3, 4)]);

    let mut suite = PropertySuite::default();
    let p = Premise::assumed(&g, 4);
    let o = suite.kempe_edge(&g, &p, 0, 1, &c, 1, 2).unwrap();
    assert!(o.applicable);
    assert_eq!(o.verdict, Verdict::Pass);
    assert_eq!(o.witness, Some(Witness::KempeEdgeFound { u: 4, v: 3 }));

    // dropping 3–4 leaves the premise intact and the conclusion false
    let h = Graph::from_edges(8, &edges[..6].iter().chain(&edges[7..]).copied().collect::<Vec<_>>()).unwrap();
    let o = suite.kempe_edge(&h, &Premise::assumed(&h, 4), 0, 1, &c, 1, 2).unwrap();
    assert_eq!(o.verdict, Verdict::Fail);
    assert!(o.witness.unwrap().reverify(&h, 4));
}

#[test]
fn degree_t_vertex_fails_min_degree() {
    let mut suite = PropertySuite::default();
    for g in [families::cycle(7).complement(), families::petersen(), families::complete_bipartite(3, 4)] {
        let delta = g.min_degree().unwrap();
        let o = suite.run_check(&g, &Premise::assumed(&g, delta), CheckId::MinDegree).unwrap();
        assert_eq!(o.verdict, Verdict::Fail);
        assert!(matches!(o.witness, Some(Witness::Degree { vertex, degree }) if degree == delta && g.degree(vertex) == delta));
    }
}

#[test]
fn clique_bound_reports_clique_witness() {
    // K_5 with a pendant path: assumed 6-chromatic, contains K_5 = K_{t-1}
    let mut edges: Vec<(usize, usize)> = families::complete(5).edges().collect();
    edges.extend([(4, 5), (5, 6)]);
    let g = Graph::from_edges(7, &edges).unwrap();
    let mut suite = PropertySuite::default();
    let o = suite.run_check(&g, &Premise::assumed(&g, 6), CheckId::CliqueBound).unwrap();
    assert_eq!(o.verdict, Verdict::Fail);
    match o.witness.unwrap() {
        Witness::Clique { vertices } => {
            assert_eq!(vertices.len(), 5);
            assert!(g.is_clique(vertices));
        }
        w => panic!("unexpected witness {w:?}"),
    }
    let k6 = families::complete(6);
    let o = suite.run_check(&k6, &oracle_premise(&k6), CheckId::CliqueBound).unwrap();
    assert_eq!(o.verdict, Verdict::VacuousPass);
}

#[test]
fn rainbow_sequences_on_k6() {
    let g = families::complete(6);
    let p = oracle_premise(&g);
    let domain = g.vertices().without(0).without(1);
    let all = enumerate_colorings_within(&g, domain, 4, 16);
    assert_eq!(all.colorings.len(), 1);
    let c = &all.colorings[0];
    let mut suite = PropertySuite::default();
    for seq in [vec![1], vec![1, 2, 3, 4], vec![4, 2]] {
        let o = suite.rainbow_path(&g, &p, 0, 1, c, &seq).unwrap();
        assert!(o.applicable);
        assert_eq!(o.verdict, Verdict::Pass, "sequence {seq:?}");
        match o.witness {
            Some(Witness::RainbowPath { path }) => {
                assert_eq!(path.len(), seq.len() + 2);
                assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }
    let o = suite.common_neighbors(&g, &p, 0, 1, c).unwrap();
    assert_eq!(o.verdict, Verdict::Pass);
}

#[test]
fn rainbow_on_c5_is_not_applicable() {
    let g = families::cycle(5);
    let p = oracle_premise(&g);
    let (x, y) = g.edges().next().unwrap();
    let domain = g.vertices().without(x).without(y);
    let c = enumerate_colorings_within(&g, domain, 1, 4).colorings;
    assert!(c.is_empty(), "P_3 is not 1-colourable");
    let c = Coloring::from_classes(domain.iter().map(VertexSet::singleton));
    let mut suite = PropertySuite::default();
    assert!(suite.rainbow_path(&g, &p, x, y, &c, &[1]).is_err());
    let o = suite.run_check(&g, &p, CheckId::RainbowPaths).unwrap();
    assert!(!o.applicable);
    assert_eq!(o.verdict, Verdict::VacuousPass);
}

#[test]
fn k8_minus_matching_passes_filters_then_fails_oracle() {
    let g = families::complete_minus_perfect_matching(8);
    assert_eq!(common::naive_chromatic(&g), 4);
    let mut suite = PropertySuite::default();
    for f in [FilterId::MinDegree, FilterId::Triangles] {
        assert!(matches!(filter_pipeline(&mut suite, &g, 4, &[f]), FilterOutcome::Survive), "{f}");
    }
    let v = double_critical_oracle(&g).unwrap();
    assert!(!v.is_double_critical);
    assert!(v.offending_edges().next().is_some());
    assert!(!common::brute_double_critical(&g));
}

#[test]
fn small_double_critical_verdicts() {
    let diamond = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    for (g, expected) in [(families::complete(6), true), (families::cycle(5), false), (diamond, false)] {
        assert_eq!(double_critical_oracle(&g).unwrap().is_double_critical, expected);
        assert_eq!(common::brute_double_critical(&g), expected);
    }
}

#[test]
fn run_all_on_complete_graphs_never_fails() {
    for t in 3..=7 {
        let r = properties::run_all(&families::complete(t)).unwrap();
        assert!(r.verdict.as_ref().unwrap().is_double_critical);
        assert!(!r.any_failed(), "K_{t}");
        assert!(!r.any_inconclusive(), "K_{t}");
    }
}
