//! The double-criticality oracle and one auditable checker per known
//! property of (non-complete) double-critical graphs.
//!
//! The statements being checked quantify over a class that is conjectured
//! to be empty, so every checker separates "the premise held" from "the
//! conclusion held". A checker whose premise fails reports
//! [`Verdict::VacuousPass`] with `applicable = false`; it never claims a
//! substantive pass it did not earn.
//!
//! The premise comes either from the oracle ([`Premise::from_verdict`]) or
//! from the caller ([`Premise::assumed`]), which is how filters and mutation
//! tests drive the conclusion logic on graphs that are not double-critical.

mod checks;
mod oracle;
mod outcome;
pub mod t8;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{BudgetExhausted, ColoringEngine, ColoringError};
use crate::error::GraphError;
use crate::graph::Graph;
use crate::structure;

pub use oracle::{double_critical_oracle, every_edge_drops_by_two, is_double_critical_with, oracle_with, DoubleCriticalVerdict, EdgeDeletion, OracleError};
pub use checks::{cycle_degree_bound, find_rainbow_path};
pub use outcome::{CheckId, CheckOutcome, PremiseSource, UnknownCheck, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid coloring: {0}")]
    Coloring(#[from] ColoringError),
    #[error("invalid color sequence: {0}")]
    Sequence(String),
    #[error("color classes must differ (got {0} twice)")]
    SameClass(usize),
    #[error("claimed t = {claimed} but the chromatic number is {actual}")]
    ChromaticMismatch { claimed: usize, actual: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
    #[error("not an eight-chromatic configuration: {0}")]
    Configuration(#[from] t8::ConfigurationError),
}

impl From<OracleError> for CheckError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Graph(e) => CheckError::Graph(e),
            OracleError::Budget(e) => CheckError::Budget(e),
        }
    }
}

/// What is known about a graph before any checker runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Premise {
    /// χ(G), or the hypothesised value when assumed.
    pub t: usize,
    pub connected: bool,
    pub complete: bool,
    pub claw_free: bool,
    pub double_critical: bool,
    pub source: PremiseSource,
}

impl Premise {
    pub fn from_verdict(g: &Graph, v: &DoubleCriticalVerdict) -> Self {
        Premise {
            t: v.t,
            connected: v.connected,
            complete: v.complete,
            claw_free: structure::is_claw_free(g),
            double_critical: v.is_double_critical,
            source: PremiseSource::Oracle,
        }
    }

    /// Take the graph as double-critical and `t`-chromatic on the caller's
    /// word. Connectivity, completeness and claw-freeness are still computed.
    pub fn assumed(g: &Graph, t: usize) -> Self {
        Premise {
            t,
            connected: g.order() > 0 && g.is_connected().unwrap_or(false),
            complete: g.is_complete(),
            claw_free: structure::is_claw_free(g),
            double_critical: true,
            source: PremiseSource::Assumed,
        }
    }

    /// Run the oracle and insist that χ(G) = `t`.
    pub fn verified(engine: &mut ColoringEngine, g: &Graph, t: usize) -> Result<(Self, DoubleCriticalVerdict), CheckError> {
        let v = oracle_with(engine, g)?;
        if v.t != t {
            return Err(CheckError::ChromaticMismatch { claimed: t, actual: v.t });
        }
        Ok((Premise::from_verdict(g, &v), v))
    }

    /// Connected and double-critical (complete graphs included).
    pub fn double_critical(&self) -> bool {
        self.connected && self.double_critical
    }

    /// Connected, double-critical, not complete.
    pub fn counterexample(&self) -> bool {
        self.double_critical() && !self.complete
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Maximum colourings enumerated per edge for colouring-quantified checks.
    pub enumeration_cap: usize,
    /// Count a pass over a truncated enumeration as a pass. Off by default:
    /// such outcomes report [`Verdict::Inconclusive`].
    pub accept_truncated: bool,
    /// Colouring-engine node budget per graph.
    pub budget: Option<u64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { enumeration_cap: 256, accept_truncated: false, budget: None }
    }
}

/// Ordered outcomes for one graph plus the oracle verdict behind them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub graph: Graph,
    pub premise: Premise,
    pub verdict: Option<DoubleCriticalVerdict>,
    pub outcomes: Vec<CheckOutcome>,
}

impl PropertyReport {
    pub fn any_failed(&self) -> bool {
        self.outcomes.iter().any(CheckOutcome::failed)
    }

    pub fn any_inconclusive(&self) -> bool {
        self.outcomes.iter().any(|o| o.verdict == Verdict::Inconclusive)
    }

    pub fn outcome(&self, id: CheckId) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }
}

/// Runs checkers through one colouring engine so every χ computation
/// shares the same budget.
#[derive(Debug, Clone)]
pub struct PropertySuite {
    engine: ColoringEngine,
    config: SuiteConfig,
}

impl Default for PropertySuite {
    fn default() -> Self {
        Self::new(SuiteConfig::default())
    }
}

impl PropertySuite {
    pub fn new(config: SuiteConfig) -> Self {
        PropertySuite { engine: ColoringEngine::with_budget(config.budget), config }
    }

    pub fn config(&self) -> &SuiteConfig {
        &self.config
    }

    pub fn engine(&mut self) -> &mut ColoringEngine {
        &mut self.engine
    }

    /// Oracle verdict under the suite's budget.
    pub fn oracle(&mut self, g: &Graph) -> Result<DoubleCriticalVerdict, OracleError> {
        oracle_with(&mut self.engine, g)
    }

    /// Oracle plus every graph-level checker.
    pub fn run_all(&mut self, g: &Graph) -> Result<PropertyReport, OracleError> {
        self.engine.reset_budget();
        let verdict = self.oracle(g)?;
        let premise = Premise::from_verdict(g, &verdict);
        let mut report = self.run_with_premise(g, &premise, &CheckId::GRAPH_LEVEL);
        report.verdict = Some(verdict);
        Ok(report)
    }

    /// Run the given graph-level checks against a supplied premise.
    /// Ids without a graph-level form (the configuration claims) are skipped.
    pub fn run_with_premise(&mut self, g: &Graph, premise: &Premise, ids: &[CheckId]) -> PropertyReport {
        let outcomes = ids.iter().filter_map(|&id| self.run_check(g, premise, id)).collect();
        PropertyReport { graph: g.clone(), premise: premise.clone(), verdict: None, outcomes }
    }

    pub fn run_check(&mut self, g: &Graph, p: &Premise, id: CheckId) -> Option<CheckOutcome> {
        Some(match id {
            CheckId::CliqueBound => self.clique_bound(g, p),
            CheckId::RainbowPaths => self.rainbow_paths(g, p),
            CheckId::CommonNeighborPerClass => self.common_neighbor_per_class(g, p),
            CheckId::EdgeWithCommonNonNeighbor => self.edge_with_common_non_neighbor(g, p),
            CheckId::PrivateNeighborsNotIsolated => self.private_neighbors_not_isolated(g, p),
            CheckId::MinDegree => self.min_degree(g, p),
            CheckId::NeighborhoodIndependence => self.neighborhood_independence(g, p),
            CheckId::NeighborhoodChromatic => self.neighborhood_chromatic(g, p),
            CheckId::ComplementShape => self.complement_shape(g, p),
            CheckId::LowDegreeIndependent => self.low_degree_independent(g, p),
            CheckId::DominatingVertexReduction => self.dominating_vertex_reduction(g, p),
            CheckId::NonNeighborhoodOddCycle => self.non_neighborhood_odd_cycle(g, p),
            CheckId::KempeEdge => self.kempe_edges(g, p),
            CheckId::CycleDegreeBounds => self.cycle_degree_bounds(g, p),
            CheckId::ClawFreeDegreeBounds => self.claw_free_degree_bounds(g, p),
            CheckId::DegreeTPlusOneNeighbors => self.degree_t_plus_one_neighbors(g, p),
            CheckId::DegreeTPlusOneIsolation => self.degree_t_plus_one_isolation(g, p),
            CheckId::ClawFreeEightRegular => self.claw_free_eight_regular(g, p),
            CheckId::ClawFreeEightNotTwoRegular => self.claw_free_eight_not_two_regular(g, p),
            CheckId::ClawFreeEightBNotCompleteToC
            | CheckId::ClawFreeEightCTriangle
            | CheckId::ClawFreeEightAbMatching => return None,
        })
    }
}

/// `G \ x` for a dominating vertex `x`.
pub fn reduce_dominating_vertex(g: &Graph, x: usize) -> Result<Graph, GraphError> {
    g.check_vertex(x)?;
    if !g.is_dominating(x) {
        return Err(GraphError::NotDominating(x));
    }
    Ok(g.delete_vertices(crate::graph::VertexSet::singleton(x))?.graph)
}

/// Oracle plus every graph-level checker with default settings.
pub fn run_all(g: &Graph) -> Result<PropertyReport, OracleError> {
    PropertySuite::default().run_all(g)
}
