//! Brute-force decision of double-criticality: one chromatic-number
//! computation per edge.

use serde::{Deserialize, Serialize};

use crate::coloring::{BudgetExhausted, ColoringEngine};
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDeletion {
    pub x: usize,
    pub y: usize,
    /// χ(G \ {x, y}).
    pub chi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCriticalVerdict {
    /// χ(G).
    pub t: usize,
    pub connected: bool,
    pub complete: bool,
    /// One row per edge in [`Graph::edges`] order.
    pub per_edge: Vec<EdgeDeletion>,
    pub is_double_critical: bool,
}

impl DoubleCriticalVerdict {
    /// Edges whose deletion does not drop χ by two.
    pub fn offending_edges(&self) -> impl Iterator<Item = &EdgeDeletion> {
        self.per_edge.iter().filter(move |e| e.chi + 2 != self.t)
    }

    /// Double-critical and not complete: a counterexample.
    pub fn is_counterexample(&self) -> bool {
        self.is_double_critical && !self.complete
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

fn deletion_domain(g: &Graph, x: usize, y: usize) -> VertexSet {
    g.vertices().without(x).without(y)
}

/// Full verdict with the per-edge table, on a fresh unbudgeted engine.
pub fn double_critical_oracle(g: &Graph) -> Result<DoubleCriticalVerdict, GraphError> {
    oracle_with(&mut ColoringEngine::new(), g).map_err(|e| match e {
        OracleError::Graph(e) => e,
        OracleError::Budget(_) => unreachable!("unbudgeted engine"),
    })
}

/// Full verdict using the caller's engine and its remaining budget.
///
/// Panics if some edge deletion lowers χ by more than two or raises it,
/// which would mean the colouring engine is wrong.
pub fn oracle_with(engine: &mut ColoringEngine, g: &Graph) -> Result<DoubleCriticalVerdict, OracleError> {
    let connected = g.is_connected()?;
    let (t, _) = engine.chromatic_number(g)?;
    let mut per_edge = Vec::with_capacity(g.size());
    for (x, y) in g.edges() {
        let (chi, _) = engine.chromatic_number_within(g, deletion_domain(g, x, y))?;
        assert!(
            chi + 2 >= t && chi <= t,
            "χ(G\\{{{x},{y}}}) = {chi} outside [{}, {t}] for {g}",
            t.saturating_sub(2)
        );
        per_edge.push(EdgeDeletion { x, y, chi });
    }
    let is_double_critical = connected && per_edge.iter().all(|e| e.chi + 2 == t);
    Ok(DoubleCriticalVerdict { t, connected, complete: g.is_complete(), per_edge, is_double_critical })
}

/// Early-exit decision: is `g` connected, `t`-chromatic, and is every
/// `G \ {x, y}` `(t-2)`-colourable? Skips the per-edge table.
pub fn is_double_critical_with(engine: &mut ColoringEngine, g: &Graph, t: usize) -> Result<bool, OracleError> {
    if !g.is_connected()? {
        return Ok(false);
    }
    if engine.chromatic_number(g)?.0 != t {
        return Ok(false);
    }
    Ok(every_edge_drops_by_two(engine, g, t)?)
}

/// Is every `G \ {x, y}` `(t-2)`-colourable? The caller vouches for χ(G) = t.
pub fn every_edge_drops_by_two(engine: &mut ColoringEngine, g: &Graph, t: usize) -> Result<bool, BudgetExhausted> {
    let Some(k) = t.checked_sub(2) else { return Ok(g.size() == 0) };
    for (x, y) in g.edges() {
        if engine.k_coloring_within(g, deletion_domain(g, x, y), k)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
