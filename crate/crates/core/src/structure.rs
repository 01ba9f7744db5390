//! Claws, triangles through an edge, and neighbourhood complements.

use serde::{Deserialize, Serialize};

use crate::coloring;
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// An induced K_{1,3}: `center` adjacent to three pairwise non-adjacent leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl ClawWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        self.leaves.iter().all(|&l| g.has_edge(self.center, l))
            && !g.has_edge(a, b)
            && !g.has_edge(a, c)
            && !g.has_edge(b, c)
    }
}

/// Find an induced claw, scanning centres by ascending degree (lowest
/// index first on ties). `None` iff `g` is claw-free.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    let mut centers: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    centers.sort_by_key(|&v| (g.degree(v), v));
    centers.into_iter().find_map(|center| {
        let nb = g.neighbors(center);
        for a in nb {
            let after_a = nb - g.closed_neighbors(a) - VertexSet::full(a + 1);
            for b in after_a {
                let after_b = after_a - g.closed_neighbors(b) - VertexSet::full(b + 1);
                if let Some(c) = after_b.first() {
                    return Some(ClawWitness { center, leaves: [a, b, c] });
                }
            }
        }
        None
    })
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// |N(x) ∩ N(y)| for an edge `xy`.
pub fn triangles_through_edge(g: &Graph, x: usize, y: usize) -> Result<usize, GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if !g.has_edge(x, y) {
        return Err(GraphError::NotAnEdge(format!("{x}-{y}")));
    }
    Ok((g.neighbors(x) & g.neighbors(y)).len())
}

/// Some `k`-clique of `g`, if ω(g) ≥ k.
pub fn contains_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    coloring::find_clique(g, k)
}

/// Shape of one connected component of H.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentShape {
    IsolatedVertex,
    /// Connected and 2-regular.
    Cycle { length: usize },
    /// Anything else (paths, chorded cycles, vertices of degree ≥ 3).
    Other { order: usize, edges: usize, max_degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub shape: ComponentShape,
    /// Vertices of the component, as vertices of G.
    pub vertices: VertexSet,
}

/// H = complement(G[N(x)]) together with its component decomposition.
///
/// A component is tagged as an isolated vertex, a cycle of any length, or
/// "other", so a violation of the expected shape comes with the offending
/// component rather than a bare `false`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodComplementProfile {
    pub center: usize,
    /// N(x) in G; also the vertex set of H.
    pub neighborhood: VertexSet,
    /// H relabelled `0..d(x)`; `map[i]` is the vertex of G behind index `i`.
    pub h: Graph,
    pub map: Vec<usize>,
    pub components: Vec<Component>,
    /// e(H) = C(d(x), 2) − e(G[N(x)]).
    pub edge_count: usize,
    /// d_H per vertex of H, in `map` order.
    pub degrees: Vec<usize>,
    /// Every component is an isolated vertex or a cycle of length ≥ 5, and
    /// at least one such cycle exists.
    pub conforming: bool,
}

impl NeighborhoodComplementProfile {
    /// d_H(v) for a vertex `v` of G lying in N(x).
    pub fn degree_of(&self, v: usize) -> Option<usize> {
        self.map.iter().position(|&u| u == v).map(|i| self.degrees[i])
    }

    pub fn component_of(&self, v: usize) -> Option<&Component> {
        self.components.iter().find(|c| c.vertices.contains(v))
    }

    /// Lengths of the cycle components, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .components
            .iter()
            .filter_map(|c| match c.shape {
                ComponentShape::Cycle { length } => Some(length),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Components that are neither isolated vertices nor cycles.
    pub fn irregular_components(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| matches!(c.shape, ComponentShape::Other { .. }))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees.iter().copied().min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degrees.iter().copied().max()
    }

    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }
}

pub fn neighborhood_complement_profile(g: &Graph, x: usize) -> Result<NeighborhoodComplementProfile, GraphError> {
    g.check_vertex(x)?;
    let neighborhood = g.neighbors(x);
    let sub = g.induced_subgraph(neighborhood)?;
    let h = sub.graph.complement();
    let degrees = h.degrees();
    let components: Vec<Component> = h
        .components_within(h.vertices())
        .into_iter()
        .map(|c| {
            let order = c.len();
            let edges = h.edges_within(c);
            let max_degree = c.iter().map(|v| h.degree(v)).max().unwrap_or(0);
            let shape = if order == 1 {
                ComponentShape::IsolatedVertex
            } else if order >= 3 && c.iter().all(|v| h.degree(v) == 2) {
                ComponentShape::Cycle { length: order }
            } else {
                ComponentShape::Other { order, edges, max_degree }
            };
            Component { shape, vertices: sub.lift(c) }
        })
        .collect();
    let edge_count = h.size();
    let conforming = components.iter().all(|c| match c.shape {
        ComponentShape::IsolatedVertex => true,
        ComponentShape::Cycle { length } => length >= 5,
        ComponentShape::Other { .. } => false,
    }) && components.iter().any(|c| matches!(c.shape, ComponentShape::Cycle { .. }));
    Ok(NeighborhoodComplementProfile {
        center: x,
        neighborhood,
        h,
        map: sub.map,
        components,
        edge_count,
        degrees,
        conforming,
    })
}
