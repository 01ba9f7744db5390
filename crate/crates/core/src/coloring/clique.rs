use super::engine::{Budget, BudgetExhausted};
use crate::graph::{Graph, VertexSet};

/// Greedy clique: repeatedly take the candidate with most candidate
/// neighbours (lowest index on ties).
pub fn greedy_clique(g: &Graph, within: VertexSet) -> VertexSet {
    let mut clique = VertexSet::EMPTY;
    let mut cand = within & g.vertices();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & cand).len(), std::cmp::Reverse(v)))
            .unwrap();
        clique.insert(v);
        cand &= g.neighbors(v);
    }
    clique
}

/// Number of colours a greedy sequential colouring of `p` uses: an upper
/// bound on the clique number of G[p].
fn color_bound(g: &Graph, p: VertexSet) -> usize {
    let mut left = p;
    let mut colors = 0;
    while !left.is_empty() {
        let mut avail = left;
        while let Some(v) = avail.first() {
            avail = avail - g.closed_neighbors(v);
            left.remove(v);
        }
        colors += 1;
    }
    colors
}

pub(super) struct CliqueSearch<'a> {
    g: &'a Graph,
    pub best: VertexSet,
    /// Stop as soon as a clique of this size is found.
    target: Option<usize>,
}

impl<'a> CliqueSearch<'a> {
    pub fn new(g: &'a Graph, start: VertexSet, target: Option<usize>) -> Self {
        CliqueSearch { g, best: start, target }
    }

    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    pub fn expand(&mut self, budget: &mut Budget, r: VertexSet, mut p: VertexSet) -> Result<(), BudgetExhausted> {
        budget.tick()?;
        if p.is_empty() {
            if r.len() > self.best.len() {
                self.best = r;
            }
            return Ok(());
        }
        let need = self.target.map_or(self.best.len() + 1, |t| t.max(self.best.len() + 1));
        if r.len() + p.len() < need || r.len() + color_bound(self.g, p) < need {
            return Ok(());
        }
        while let Some(v) = p.iter().max_by_key(|&v| ((self.g.neighbors(v) & p).len(), std::cmp::Reverse(v))) {
            if self.done() || r.len() + p.len() <= self.best.len() {
                break;
            }
            self.expand(budget, r.with(v), p & self.g.neighbors(v))?;
            p.remove(v);
        }
        Ok(())
    }
}
