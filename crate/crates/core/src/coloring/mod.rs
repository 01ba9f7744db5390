//! Exact colouring, cliques and independent sets.
//!
//! Everything here works on a vertex *domain* inside a parent graph, so the
//! colouring of `G \ {x, y}` keeps the parent's vertex indices. The free
//! functions run an unbudgeted [`ColoringEngine`]; scans that must not hang
//! hold their own engine with a node budget.

mod clique;
mod engine;
mod enumerate;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use clique::greedy_clique;
pub use engine::{BudgetExhausted, ColoringEngine};
pub use enumerate::ColoringEnumeration;

/// A proper colouring of some vertex domain, as its colour classes
/// V_1, …, V_k. Classes are nonempty and pairwise disjoint; colour `i`
/// (1-based) is `classes[i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    classes: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color classes {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("class {class} contains the edge {u}-{v}")]
    NotIndependent { class: usize, u: usize, v: usize },
    #[error("colored vertex {0} is outside the graph")]
    OutOfRange(usize),
    #[error("coloring covers {actual:?}, expected {expected:?}")]
    DomainMismatch { expected: VertexSet, actual: VertexSet },
    #[error("coloring uses {used} colors, more than the {allowed} allowed")]
    TooManyColors { used: usize, allowed: usize },
    #[error("empty color class {0}")]
    EmptyClass(usize),
}

impl Coloring {
    /// Build from classes, dropping empty ones. Does not check properness.
    pub fn from_classes(classes: impl IntoIterator<Item = VertexSet>) -> Self {
        Coloring { classes: classes.into_iter().filter(|c| !c.is_empty()).collect() }
    }

    /// Build from a colour per vertex (`None` = uncoloured). Colours are
    /// arbitrary labels; classes come out in canonical order.
    pub fn from_assignment(colors: &[Option<usize>]) -> Self {
        let mut by_label: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for (v, c) in colors.iter().enumerate() {
            if let Some(c) = c {
                by_label.entry(*c).or_default().insert(v);
            }
        }
        Coloring::from_classes(by_label.into_values()).canonical()
    }

    pub fn empty() -> Self {
        Coloring { classes: Vec::new() }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Colour class `i`, 1-based.
    pub fn class(&self, i: usize) -> Option<VertexSet> {
        i.checked_sub(1).and_then(|i| self.classes.get(i).copied())
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    pub fn domain(&self) -> VertexSet {
        self.classes.iter().fold(VertexSet::EMPTY, |acc, &c| acc | c)
    }

    /// Colour of `v`, 1-based.
    pub fn color(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v)).map(|i| i + 1)
    }

    /// Classes ordered by least vertex.
    pub fn canonical(mut self) -> Self {
        self.classes.sort_by_key(|c| c.first());
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.classes.windows(2).all(|w| w[0].first() < w[1].first())
    }

    /// Check the classes are nonempty, disjoint, inside `g`, and independent.
    pub fn verify(&self, g: &Graph) -> Result<(), ColoringError> {
        let mut seen = VertexSet::EMPTY;
        for (i, &class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(ColoringError::EmptyClass(i + 1));
            }
            if let Some(v) = (class - g.vertices()).first() {
                return Err(ColoringError::OutOfRange(v));
            }
            if !class.is_disjoint(seen) {
                let v = (class & seen).first().unwrap();
                let j = self.color(v).unwrap();
                return Err(ColoringError::Overlap(j, i + 1));
            }
            seen |= class;
            for u in class {
                if let Some(v) = (g.neighbors(u) & class).first() {
                    return Err(ColoringError::NotIndependent { class: i + 1, u, v });
                }
            }
        }
        Ok(())
    }

    /// [`verify`](Self::verify) plus an exact domain and a colour bound.
    pub fn verify_on(&self, g: &Graph, domain: VertexSet, max_colors: usize) -> Result<(), ColoringError> {
        self.verify(g)?;
        if self.domain() != domain {
            return Err(ColoringError::DomainMismatch { expected: domain, actual: self.domain() });
        }
        if self.num_colors() > max_colors {
            return Err(ColoringError::TooManyColors { used: self.num_colors(), allowed: max_colors });
        }
        Ok(())
    }

    /// DIMACS-style solution text: `s col K` followed by one `l V C` line
    /// per coloured vertex, with 1-based vertices and colours.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("s col {}\n", self.num_colors());
        for v in self.domain() {
            let _ = writeln!(out, "l {} {}", v + 1, self.color(v).unwrap());
        }
        out
    }

    /// JSON object `{"vertex": color}` with 0-based vertices and 1-based colours.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .domain()
            .iter()
            .map(|v| (v.to_string(), serde_json::Value::from(self.color(v).unwrap())))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// A maximum clique of `g`.
pub fn max_clique(g: &Graph) -> VertexSet {
    ColoringEngine::new().max_clique_within(g, g.vertices()).expect("unbudgeted")
}

/// A maximum independent set of `g`, found as a maximum clique of the
/// complement.
pub fn independence_number(g: &Graph) -> VertexSet {
    max_clique(&g.complement())
}

/// Some `k`-clique of `g`, if one exists.
pub fn find_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    ColoringEngine::new().find_clique_within(g, g.vertices(), k).expect("unbudgeted")
}

pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    ColoringEngine::new().k_coloring_within(g, g.vertices(), k).expect("unbudgeted")
}

/// χ(G) with an optimal colouring.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    ColoringEngine::new().chromatic_number_within(g, g.vertices()).expect("unbudgeted")
}

/// χ(G[S]) for `S ⊆ V(G)`, colouring keyed by parent vertices.
pub fn chromatic_number_within(g: &Graph, domain: VertexSet) -> (usize, Coloring) {
    ColoringEngine::new().chromatic_number_within(g, domain).expect("unbudgeted")
}

/// Proper `k`-colourings of `g` up to relabelling colours, at most `cap`.
pub fn enumerate_colorings(g: &Graph, k: usize, cap: usize) -> ColoringEnumeration {
    enumerate::collect(g, g.vertices(), k, cap)
}

pub fn enumerate_colorings_within(g: &Graph, domain: VertexSet, k: usize, cap: usize) -> ColoringEnumeration {
    enumerate::collect(g, domain, k, cap)
}

pub use enumerate::for_each_coloring;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn verify_catches_bad_colorings() {
        let c5 = families::cycle(5);
        let bad = Coloring::from_classes([VertexSet::from_bits(0b00011), VertexSet::from_bits(0b11100)]);
        assert!(matches!(bad.verify(&c5), Err(ColoringError::NotIndependent { class: 1, u: 0, v: 1 })));
        let overlap = Coloring::from_classes([VertexSet::from_bits(0b101), VertexSet::from_bits(0b100)]);
        assert!(matches!(overlap.verify(&c5), Err(ColoringError::Overlap(1, 2))));
        let good = Coloring::from_assignment(&[Some(7), Some(3), Some(7), Some(3), Some(0)]);
        assert!(good.verify(&c5).is_ok());
        assert!(good.is_canonical());
        assert_eq!(good.color(0), Some(1));
        assert_eq!(good.color(4), Some(3));
    }

    #[test]
    fn exports() {
        let c = Coloring::from_assignment(&[Some(0), Some(1), None, Some(0)]);
        assert_eq!(c.to_dimacs(), "s col 2\nl 1 1\nl 2 2\nl 4 1\n");
        assert_eq!(c.to_json(), serde_json::json!({"0": 1, "1": 2, "3": 1}));
    }
}
