use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};
use crate::structure::Component;

/// One checker per known necessary condition on non-complete
/// double-critical graphs (plus the conditions that also hold for K_t).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    /// No K_{t-1} subgraph.
    CliqueBound,
    /// Colour-prescribed paths between the ends of every edge.
    RainbowPaths,
    /// The ends of an edge share a neighbour in every colour class.
    CommonNeighborPerClass,
    /// Some edge has a common non-neighbour.
    EdgeWithCommonNonNeighbor,
    /// G[N(x) \ N[y]] has no isolated vertex.
    PrivateNeighborsNotIsolated,
    /// δ(G) ≥ t + 1.
    MinDegree,
    /// α(G[N(x)]) ≤ d(x) − t + 1.
    NeighborhoodIndependence,
    /// χ(G[N(x)]) ≤ t − 3 when x has a non-neighbour.
    NeighborhoodChromatic,
    /// Complement of N(x) is isolated vertices plus long cycles when d(x) = t + 1.
    ComplementShape,
    /// No two adjacent vertices of degree t + 1.
    LowDegreeIndependent,
    /// Deleting a dominating vertex leaves a double-critical graph.
    DominatingVertexReduction,
    /// G \ N[x] contains an odd cycle and d(x) ≤ |V| − 4.
    NonNeighborhoodOddCycle,
    /// Kempe-style edge between colour classes.
    KempeEdge,
    /// Degree lower bounds for vertices on long cycles of the complement.
    CycleDegreeBounds,
    /// Δ bounds for claw-free graphs.
    ClawFreeDegreeBounds,
    /// Structure around a vertex of degree t + 1 (t ≥ 6).
    DegreeTPlusOneNeighbors,
    /// A degree-(t+1) vertex has no neighbour of degree t+1, t+2 or t+3 (t ≥ 6).
    DegreeTPlusOneIsolation,
    /// 8-chromatic claw-free: 10-regular, complement degrees in [2, 3].
    ClawFreeEightRegular,
    /// 8-chromatic claw-free: no neighbourhood complement is 2-regular.
    ClawFreeEightNotTwoRegular,
    /// 8-chromatic claw-free configuration: B not complete to C.
    ClawFreeEightBNotCompleteToC,
    /// 8-chromatic claw-free configuration: G[C] is a triangle.
    ClawFreeEightCTriangle,
    /// 8-chromatic claw-free configuration: H[A ∪ B] is the matching u_i v_i.
    ClawFreeEightAbMatching,
}

impl CheckId {
    /// The graph-level checks `run_all` executes, in report order.
    pub const GRAPH_LEVEL: [CheckId; 18] = [
        CheckId::CliqueBound,
        CheckId::RainbowPaths,
        CheckId::CommonNeighborPerClass,
        CheckId::EdgeWithCommonNonNeighbor,
        CheckId::PrivateNeighborsNotIsolated,
        CheckId::MinDegree,
        CheckId::NeighborhoodIndependence,
        CheckId::NeighborhoodChromatic,
        CheckId::ComplementShape,
        CheckId::LowDegreeIndependent,
        CheckId::DominatingVertexReduction,
        CheckId::NonNeighborhoodOddCycle,
        CheckId::KempeEdge,
        CheckId::CycleDegreeBounds,
        CheckId::ClawFreeDegreeBounds,
        CheckId::DegreeTPlusOneNeighbors,
        CheckId::DegreeTPlusOneIsolation,
        CheckId::ClawFreeEightRegular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::CliqueBound => "clique_bound",
            CheckId::RainbowPaths => "rainbow_paths",
            CheckId::CommonNeighborPerClass => "common_neighbor_per_class",
            CheckId::EdgeWithCommonNonNeighbor => "edge_with_common_non_neighbor",
            CheckId::PrivateNeighborsNotIsolated => "private_neighbors_not_isolated",
            CheckId::MinDegree => "min_degree",
            CheckId::NeighborhoodIndependence => "neighborhood_independence",
            CheckId::NeighborhoodChromatic => "neighborhood_chromatic",
            CheckId::ComplementShape => "complement_shape",
            CheckId::LowDegreeIndependent => "low_degree_independent",
            CheckId::DominatingVertexReduction => "dominating_vertex_reduction",
            CheckId::NonNeighborhoodOddCycle => "non_neighborhood_odd_cycle",
            CheckId::KempeEdge => "kempe_edge",
            CheckId::CycleDegreeBounds => "cycle_degree_bounds",
            CheckId::ClawFreeDegreeBounds => "claw_free_degree_bounds",
            CheckId::DegreeTPlusOneNeighbors => "degree_t_plus_one_neighbors",
            CheckId::DegreeTPlusOneIsolation => "degree_t_plus_one_isolation",
            CheckId::ClawFreeEightRegular => "claw_free_eight_regular",
            CheckId::ClawFreeEightNotTwoRegular => "claw_free_eight_not_two_regular",
            CheckId::ClawFreeEightBNotCompleteToC => "claw_free_eight_b_not_complete_to_c",
            CheckId::ClawFreeEightCTriangle => "claw_free_eight_c_triangle",
            CheckId::ClawFreeEightAbMatching => "claw_free_eight_ab_matching",
        }
    }

    /// Short alias accepted on the command line.
    pub fn short(self) -> &'static str {
        match self {
            CheckId::CliqueBound => "a",
            CheckId::RainbowPaths => "b",
            CheckId::CommonNeighborPerClass => "c",
            CheckId::EdgeWithCommonNonNeighbor => "d",
            CheckId::PrivateNeighborsNotIsolated => "e",
            CheckId::MinDegree => "f",
            CheckId::NeighborhoodIndependence => "g",
            CheckId::NeighborhoodChromatic => "h",
            CheckId::ComplementShape => "i",
            CheckId::LowDegreeIndependent => "j",
            CheckId::DominatingVertexReduction => "l22",
            CheckId::NonNeighborhoodOddCycle => "l23",
            CheckId::KempeEdge => "l24a",
            CheckId::CycleDegreeBounds => "l24b",
            CheckId::ClawFreeDegreeBounds => "l25",
            CheckId::DegreeTPlusOneNeighbors => "thm14",
            CheckId::DegreeTPlusOneIsolation => "cor15",
            CheckId::ClawFreeEightRegular => "claim1",
            CheckId::ClawFreeEightNotTwoRegular => "claim3",
            CheckId::ClawFreeEightBNotCompleteToC => "claim4",
            CheckId::ClawFreeEightCTriangle => "claim5",
            CheckId::ClawFreeEightAbMatching => "claim6",
        }
    }

    pub fn all() -> impl Iterator<Item = CheckId> {
        CheckId::GRAPH_LEVEL.into_iter().chain([
            CheckId::ClawFreeEightNotTwoRegular,
            CheckId::ClawFreeEightBNotCompleteToC,
            CheckId::ClawFreeEightCTriangle,
            CheckId::ClawFreeEightAbMatching,
        ])
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check id `{0}`")]
pub struct UnknownCheck(pub String);

impl FromStr for CheckId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, UnknownCheck> {
        // claim2 shares the regularity checker with claim1
        let s = if s == "claim2" { "claim1" } else { s };
        CheckId::all().find(|id| id.name() == s || id.short() == s).ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The premise did not hold; nothing was asserted.
    VacuousPass,
    /// The premise held but the check could not finish (budget, or a
    /// truncated enumeration under the conservative policy).
    Inconclusive,
}

/// Evidence attached to an outcome. Failure witnesses describe a concrete
/// violation that [`Witness::reverify`] can re-check against the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Clique { vertices: VertexSet },
    RainbowPath { path: Vec<usize> },
    MissingRainbowPath { x: usize, y: usize, sequence: Vec<usize>, coloring: Coloring },
    ClassWithoutCommonNeighbor { x: usize, y: usize, class: usize, coloring: Coloring },
    FewTriangles { x: usize, y: usize, triangles: usize },
    CommonNonNeighbor { x: usize, y: usize, z: usize },
    NoEdgeWithCommonNonNeighbor { edges_checked: usize },
    IsolatedPrivateNeighbor { x: usize, y: usize, z: usize },
    ComplementDegreeOne { x: usize, z: usize },
    Degree { vertex: usize, degree: usize },
    IndependentNeighbors { vertex: usize, set: VertexSet },
    NeighborhoodColoring { vertex: usize, chi: usize },
    Components { center: usize, components: Vec<Component> },
    AdjacentDegrees { x: usize, y: usize, dx: usize, dy: usize },
    ReductionFailed { vertex: usize, chi: usize, double_critical: bool },
    NonNeighborhood { vertex: usize, chi: usize, degree: usize },
    KempeEdgeMissing { x: usize, y: usize, i: usize, j: usize, coloring: Coloring },
    KempeEdgeFound { u: usize, v: usize },
    CycleDegree { x: usize, y: usize, cycle_length: usize, degree: usize, bound: usize },
    CommonNeighborCount { x: usize, y: usize, common: usize },
    CycleSpectrum { center: usize, cycles: Vec<usize> },
    ComplementEdgeCount { center: usize, edges: usize },
    ComplementDegrees { center: usize, min: usize, max: usize },
    Edge { x: usize, y: usize },
    NonEdge { x: usize, y: usize },
    Vertices { vertices: VertexSet },
}

impl Witness {
    /// Re-check the structural fact a failure witness asserts, using only
    /// the graph, the hypothesised `t`, and brute-force recomputation.
    pub fn reverify(&self, g: &Graph, t: usize) -> bool {
        let nb = |v: usize| g.neighbors(v);
        match self {
            Witness::Clique { vertices } => g.is_clique(*vertices) && vertices.len() + 1 >= t,
            Witness::MissingRainbowPath { x, y, sequence, coloring } => {
                g.has_edge(*x, *y)
                    && coloring.verify_on(g, g.vertices().without(*x).without(*y), t.saturating_sub(2)).is_ok()
                    && !brute_rainbow_path(g, *x, *y, coloring, sequence)
            }
            Witness::ClassWithoutCommonNeighbor { x, y, class, coloring } => {
                g.has_edge(*x, *y)
                    && coloring.verify(g).is_ok()
                    && coloring.class(*class).unwrap_or_default().is_disjoint(nb(*x) & nb(*y))
            }
            Witness::FewTriangles { x, y, triangles } => {
                g.has_edge(*x, *y) && (nb(*x) & nb(*y)).len() == *triangles && triangles + 2 < t
            }
            Witness::NoEdgeWithCommonNonNeighbor { .. } => {
                g.edges().all(|(x, y)| (g.closed_neighbors(x) | g.closed_neighbors(y)) == g.vertices())
            }
            Witness::IsolatedPrivateNeighbor { x, y, z } => {
                let private = nb(*x) - g.closed_neighbors(*y);
                g.has_edge(*x, *y) && private.contains(*z) && nb(*z).is_disjoint(private)
            }
            Witness::ComplementDegreeOne { x, z } => {
                nb(*x).contains(*z) && (nb(*x) - g.closed_neighbors(*z)).len() == 1
            }
            Witness::Degree { vertex, degree } => *vertex < g.order() && g.degree(*vertex) == *degree,
            Witness::IndependentNeighbors { vertex, set } => {
                set.is_subset(nb(*vertex)) && g.is_independent(*set)
            }
            Witness::NeighborhoodColoring { vertex, chi } => {
                *vertex < g.order() && crate::coloring::chromatic_number_within(g, nb(*vertex)).0 == *chi
            }
            Witness::AdjacentDegrees { x, y, dx, dy } => {
                g.has_edge(*x, *y) && g.degree(*x) == *dx && g.degree(*y) == *dy
            }
            Witness::NonNeighborhood { vertex, chi, degree } => {
                *vertex < g.order()
                    && g.degree(*vertex) == *degree
                    && crate::coloring::chromatic_number_within(g, g.vertices() - g.closed_neighbors(*vertex)).0 == *chi
            }
            Witness::KempeEdgeMissing { x, y, i, j, coloring } => {
                let vi = coloring.class(*i).unwrap_or_default();
                let vj = coloring.class(*j).unwrap_or_default();
                let common = nb(*x) & nb(*y) & vi;
                let target = nb(*x) & vj;
                let source = (nb(*y) - nb(*x)) & vi;
                g.has_edge(*x, *y)
                    && coloring.verify(g).is_ok()
                    && common.iter().all(|u| nb(u).is_disjoint(target))
                    && source.iter().all(|u| nb(u).is_disjoint(target))
            }
            Witness::CycleDegree { y, degree, bound, .. } => g.degree(*y) == *degree && degree < bound,
            Witness::CommonNeighborCount { x, y, common } => (nb(*x) & nb(*y)).len() == *common,
            Witness::Components { center, .. }
            | Witness::CycleSpectrum { center, .. }
            | Witness::ComplementEdgeCount { center, .. }
            | Witness::ComplementDegrees { center, .. } => {
                let Ok(p) = crate::structure::neighborhood_complement_profile(g, *center) else { return false };
                match self {
                    Witness::Components { components, .. } => &p.components == components,
                    Witness::CycleSpectrum { cycles, .. } => &p.cycle_lengths() == cycles,
                    Witness::ComplementEdgeCount { edges, .. } => p.edge_count == *edges,
                    Witness::ComplementDegrees { min, max, .. } => {
                        p.min_degree() == Some(*min) && p.max_degree() == Some(*max)
                    }
                    _ => unreachable!(),
                }
            }
            Witness::ReductionFailed { vertex, chi, double_critical } => {
                let Ok(sub) = g.delete_vertices(VertexSet::singleton(*vertex)) else { return false };
                match crate::properties::double_critical_oracle(&sub.graph) {
                    Ok(v) => v.t == *chi && v.is_double_critical == *double_critical,
                    Err(_) => false,
                }
            }
            Witness::Edge { x, y } => g.has_edge(*x, *y),
            Witness::NonEdge { x, y } => x != y && *x < g.order() && *y < g.order() && !g.has_edge(*x, *y),
            Witness::Vertices { vertices } => vertices.is_subset(g.vertices()),
            Witness::RainbowPath { path } => path.windows(2).all(|w| g.has_edge(w[0], w[1])),
            Witness::CommonNonNeighbor { x, y, z } => {
                g.has_edge(*x, *y) && !g.closed_neighbors(*x).contains(*z) && !g.closed_neighbors(*y).contains(*z)
            }
            Witness::KempeEdgeFound { u, v } => g.has_edge(*u, *v),
        }
    }
}

/// Path search by plain DFS over vertex sequences; independent of the
/// layered search the checker uses.
fn brute_rainbow_path(g: &Graph, x: usize, y: usize, coloring: &Coloring, sequence: &[usize]) -> bool {
    fn go(g: &Graph, at: usize, y: usize, coloring: &Coloring, rest: &[usize]) -> bool {
        match rest.split_first() {
            None => g.has_edge(at, y),
            Some((&c, tail)) => (0..g.order())
                .filter(|&v| g.has_edge(at, v) && coloring.color(v) == Some(c))
                .any(|v| go(g, v, y, coloring, tail)),
        }
    }
    go(g, x, y, coloring, sequence)
}

/// Where the double-critical premise came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PremiseSource {
    /// Computed by the oracle.
    Oracle,
    /// Asserted by the caller (filter hypotheses, mutation tests).
    Assumed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: CheckId,
    /// The premise (graph-level and, where the statement has one, the local
    /// "if" clause for at least one instance) held.
    pub applicable: bool,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Work units: instances examined plus colouring-engine nodes.
    pub cost: u64,
    pub premise_source: PremiseSource,
    /// A colouring enumeration hit its cap.
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn is_vacuous(&self) -> bool {
        self.verdict == Verdict::VacuousPass
    }
}
