use std::ops::ControlFlow;

use super::Coloring;
use crate::graph::{Graph, VertexSet};

/// Collected output of a capped enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringEnumeration {
    pub colorings: Vec<Coloring>,
    /// More colourings exist beyond the cap.
    pub truncated: bool,
}

/// Visit every proper colouring of G[domain] with at most `k` colours, up
/// to relabelling. Vertices are coloured in ascending order and a vertex may
/// only open the least unused colour, so each partition into independent
/// classes appears exactly once, with classes ordered by least vertex.
///
/// Returns `Break` if the visitor stopped the walk.
pub fn for_each_coloring<F>(g: &Graph, domain: VertexSet, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&Coloring) -> ControlFlow<()>,
{
    let order: Vec<usize> = (domain & g.vertices()).to_vec();
    let k = k.min(order.len());
    if order.is_empty() {
        return visit(&Coloring::empty());
    }
    if k == 0 {
        return ControlFlow::Continue(());
    }
    let mut classes = vec![VertexSet::EMPTY; k];
    walk(g, &order, 0, 0, &mut classes, &mut visit)
}

fn walk<F>(g: &Graph, order: &[usize], depth: usize, used: usize, classes: &mut [VertexSet], visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Coloring) -> ControlFlow<()>,
{
    let Some(&v) = order.get(depth) else {
        return visit(&Coloring::from_classes(classes[..used].iter().copied()));
    };
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if !classes[c].is_disjoint(g.neighbors(v)) {
            continue;
        }
        classes[c].insert(v);
        let r = walk(g, order, depth + 1, used.max(c + 1), classes, visit);
        classes[c].remove(v);
        r?;
    }
    ControlFlow::Continue(())
}

pub(super) fn collect(g: &Graph, domain: VertexSet, k: usize, cap: usize) -> ColoringEnumeration {
    let mut colorings = Vec::new();
    let mut truncated = false;
    let _ = for_each_coloring(g, domain, k, |c| {
        if colorings.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        colorings.push(c.clone());
        ControlFlow::Continue(())
    });
    ColoringEnumeration { colorings, truncated }
}
