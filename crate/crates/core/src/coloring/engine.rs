use thiserror::Error;

use super::clique::{greedy_clique, CliqueSearch};
use super::Coloring;
use crate::graph::{Graph, VertexSet};

/// The search ran out of nodes before reaching an answer. This is never a
/// wrong answer, only a missing one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("node budget of {limit} exhausted")]
pub struct BudgetExhausted {
    pub limit: u64,
}

#[derive(Debug, Clone)]
pub(super) struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExhausted> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }
}

/// Exact colouring search with an optional node budget.
///
/// The budget is an allowance of search nodes shared by every call until
/// [`reset_budget`](Self::reset_budget). One engine per worker thread.
#[derive(Debug, Clone)]
pub struct ColoringEngine {
    budget: Budget,
    total: u64,
}

impl Default for ColoringEngine {
    fn default() -> Self {
        Self::new()
    }
}

const UNCOLORED: u8 = u8::MAX;

impl ColoringEngine {
    pub fn new() -> Self {
        ColoringEngine { budget: Budget { limit: None, used: 0 }, total: 0 }
    }

    pub fn with_budget(limit: Option<u64>) -> Self {
        ColoringEngine { budget: Budget { limit, used: 0 }, total: 0 }
    }

    pub fn limit(&self) -> Option<u64> {
        self.budget.limit
    }

    /// Refill the allowance. Lifetime node counts are kept.
    pub fn reset_budget(&mut self) {
        self.total += self.budget.used;
        self.budget.used = 0;
    }

    /// Nodes spent since the last reset.
    pub fn nodes_used(&self) -> u64 {
        self.budget.used
    }

    pub fn total_nodes(&self) -> u64 {
        self.total + self.budget.used
    }

    pub fn max_clique_within(&mut self, g: &Graph, within: VertexSet) -> Result<VertexSet, BudgetExhausted> {
        let within = within & g.vertices();
        let mut search = CliqueSearch::new(g, greedy_clique(g, within), None);
        search.expand(&mut self.budget, VertexSet::EMPTY, within)?;
        Ok(search.best)
    }

    pub fn find_clique_within(&mut self, g: &Graph, within: VertexSet, k: usize) -> Result<Option<VertexSet>, BudgetExhausted> {
        let within = within & g.vertices();
        if k == 0 {
            return Ok(Some(VertexSet::EMPTY));
        }
        let greedy = greedy_clique(g, within);
        let found = if greedy.len() >= k {
            greedy
        } else {
            let mut search = CliqueSearch::new(g, VertexSet::EMPTY, Some(k));
            search.expand(&mut self.budget, VertexSet::EMPTY, within)?;
            search.best
        };
        // trim to exactly k vertices
        Ok((found.len() >= k).then(|| found.iter().take(k).collect()))
    }

    /// A proper colouring of G[domain] with at most `k` colours, or `None`
    /// when none exists.
    pub fn k_coloring_within(&mut self, g: &Graph, domain: VertexSet, k: usize) -> Result<Option<Coloring>, BudgetExhausted> {
        let domain = domain & g.vertices();
        if domain.is_empty() {
            return Ok(Some(Coloring::empty()));
        }
        if k == 0 {
            return Ok(None);
        }
        let k = k.min(domain.len());
        let clique = self.max_clique_within(g, domain)?;
        if clique.len() > k {
            return Ok(None);
        }
        let mut search = Search::new(g, domain, k);
        for (c, v) in clique.iter().enumerate() {
            search.assign(v, c as u8);
        }
        search.used = clique.len();
        if search.solve(&mut self.budget)? {
            Ok(Some(search.coloring()))
        } else {
            Ok(None)
        }
    }

    /// χ(G[domain]) and an optimal colouring. The search ascends from a
    /// clique lower bound to a DSATUR upper bound.
    pub fn chromatic_number_within(&mut self, g: &Graph, domain: VertexSet) -> Result<(usize, Coloring), BudgetExhausted> {
        let domain = domain & g.vertices();
        if domain.is_empty() {
            return Ok((0, Coloring::empty()));
        }
        let upper = dsatur_greedy(g, domain);
        let mut lower = greedy_clique(g, domain).len();
        if lower < upper.num_colors() {
            lower = self.max_clique_within(g, domain)?.len();
        }
        for k in lower..upper.num_colors() {
            if let Some(c) = self.k_coloring_within(g, domain, k)? {
                debug_assert_eq!(c.num_colors(), k);
                return Ok((k, c));
            }
        }
        Ok((upper.num_colors(), upper))
    }

    pub fn chromatic_number(&mut self, g: &Graph) -> Result<(usize, Coloring), BudgetExhausted> {
        self.chromatic_number_within(g, g.vertices())
    }
}

/// Greedy DSATUR colouring of G[domain].
pub(super) fn dsatur_greedy(g: &Graph, domain: VertexSet) -> Coloring {
    let mut search = Search::new(g, domain, domain.len().max(1));
    while let Some(v) = search.pick() {
        let c = (!search.forbidden[v]).trailing_zeros() as u8;
        search.assign(v, c);
        search.used = search.used.max(c as usize + 1);
    }
    search.coloring()
}

/// Backtracking state. `forbidden[v]` has bit `c` set when a coloured
/// neighbour of `v` holds colour `c`.
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    domain: VertexSet,
    uncolored: VertexSet,
    color: [u8; 64],
    forbidden: [u64; 64],
    used: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, domain: VertexSet, k: usize) -> Self {
        Search { g, k, domain, uncolored: domain, color: [UNCOLORED; 64], forbidden: [0; 64], used: 0 }
    }

    /// Colour `v` with `c`; returns the neighbours that newly lost `c`.
    fn assign(&mut self, v: usize, c: u8) -> VertexSet {
        self.color[v] = c;
        self.uncolored.remove(v);
        let bit = 1u64 << c;
        let mut changed = VertexSet::EMPTY;
        for u in self.g.neighbors(v) & self.uncolored {
            if self.forbidden[u] & bit == 0 {
                self.forbidden[u] |= bit;
                changed.insert(u);
            }
        }
        changed
    }

    fn unassign(&mut self, v: usize, changed: VertexSet) {
        let bit = 1u64 << self.color[v];
        for u in changed {
            self.forbidden[u] &= !bit;
        }
        self.color[v] = UNCOLORED;
        self.uncolored.insert(v);
    }

    /// Highest saturation, then most uncoloured neighbours, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for v in self.uncolored {
            let key = (self.forbidden[v].count_ones(), (self.g.neighbors(v) & self.uncolored).len());
            match best {
                Some((s, d, _)) if (s, d) >= key => {}
                _ => best = Some((key.0, key.1, v)),
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn solve(&mut self, budget: &mut Budget) -> Result<bool, BudgetExhausted> {
        let Some(v) = self.pick() else { return Ok(true) };
        let all = if self.k >= 64 { u64::MAX } else { (1u64 << self.k) - 1 };
        let open = !self.forbidden[v] & all;
        if open == 0 {
            return Ok(false);
        }
        let used = self.used;
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if open >> c & 1 == 0 {
                continue;
            }
            budget.tick()?;
            let changed = self.assign(v, c as u8);
            let wiped = changed.iter().any(|u| self.forbidden[u] & all == all);
            self.used = used.max(c + 1);
            if !wiped && self.solve(budget)? {
                return Ok(true);
            }
            self.used = used;
            self.unassign(v, changed);
        }
        Ok(false)
    }

    fn coloring(&self) -> Coloring {
        let mut classes = vec![VertexSet::EMPTY; self.used.max(1)];
        for v in self.domain - self.uncolored {
            classes[self.color[v] as usize].insert(v);
        }
        Coloring::from_classes(classes).canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn budget_is_a_distinct_outcome() {
        let g = families::grotzsch();
        let mut engine = ColoringEngine::with_budget(Some(3));
        assert_eq!(engine.chromatic_number(&g), Err(BudgetExhausted { limit: 3 }));
        engine.reset_budget();
        assert!(engine.total_nodes() > 0);
        let mut engine = ColoringEngine::new();
        assert_eq!(engine.chromatic_number(&g).unwrap().0, 4);
    }

    #[test]
    fn dsatur_is_proper() {
        for g in [families::petersen(), families::grotzsch(), families::wheel(7), families::complete(9)] {
            let c = dsatur_greedy(&g, g.vertices());
            c.verify_on(&g, g.vertices(), g.order()).unwrap();
        }
    }

    #[test]
    fn domain_colorings_keep_parent_indices() {
        let k6 = families::complete(6);
        let domain = k6.vertices().without(0).without(3);
        let (chi, c) = ColoringEngine::new().chromatic_number_within(&k6, domain).unwrap();
        assert_eq!(chi, 4);
        assert_eq!(c.domain(), domain);
        c.verify(&k6).unwrap();
    }
}
