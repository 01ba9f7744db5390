//! Cheap necessary conditions for "non-complete double-critical with
//! chromatic number t". Each filter takes `t` as a hypothesis and rejects only
//! when a known property of that class is violated.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::properties::{CheckId, Premise, PropertySuite, UnknownCheck, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FilterId {
    /// δ ≥ t + 1.
    #[serde(rename = "f")]
    MinDegree,
    /// No two adjacent vertices of degree t + 1.
    #[serde(rename = "j")]
    LowDegreeIndependent,
    /// Every edge lies in at least t − 2 triangles.
    #[serde(rename = "c")]
    Triangles,
    /// A degree-(t+1) vertex has no neighbour of degree t+1..=t+3 (t ≥ 6).
    #[serde(rename = "cor15")]
    DegreeTPlusOneIsolation,
    /// Claw-free degree bounds (t ≥ 6, claw-free graphs only).
    #[serde(rename = "l25")]
    ClawFreeDegreeBounds,
    /// 10-regularity and complement degrees (t = 8, claw-free graphs only).
    #[serde(rename = "claim1")]
    ClawFreeEightRegular,
    /// Shape of the complement of N(x) when d(x) = t + 1.
    #[serde(rename = "i")]
    ComplementShape,
    /// Neighbourhood structure at degree-(t+1) vertices (t ≥ 6).
    #[serde(rename = "thm14")]
    DegreeTPlusOneNeighbors,
    /// No K_{t−1}.
    #[serde(rename = "a")]
    CliqueBound,
    /// G \ N[x] is not bipartite.
    #[serde(rename = "l23")]
    NonNeighborhoodOddCycle,
}

impl FilterId {
    /// Every filter, cheapest first.
    pub const COST_ORDER: [FilterId; 10] = [
        FilterId::MinDegree,
        FilterId::LowDegreeIndependent,
        FilterId::Triangles,
        FilterId::DegreeTPlusOneIsolation,
        FilterId::ClawFreeDegreeBounds,
        FilterId::ClawFreeEightRegular,
        FilterId::ComplementShape,
        FilterId::DegreeTPlusOneNeighbors,
        FilterId::CliqueBound,
        FilterId::NonNeighborhoodOddCycle,
    ];

    pub fn short(self) -> &'static str {
        match self {
            FilterId::MinDegree => "f",
            FilterId::LowDegreeIndependent => "j",
            FilterId::Triangles => "c",
            FilterId::DegreeTPlusOneIsolation => "cor15",
            FilterId::ClawFreeDegreeBounds => "l25",
            FilterId::ClawFreeEightRegular => "claim1",
            FilterId::ComplementShape => "i",
            FilterId::DegreeTPlusOneNeighbors => "thm14",
            FilterId::CliqueBound => "a",
            FilterId::NonNeighborhoodOddCycle => "l23",
        }
    }

    fn check(self) -> Option<CheckId> {
        Some(match self {
            FilterId::MinDegree => CheckId::MinDegree,
            FilterId::LowDegreeIndependent => CheckId::LowDegreeIndependent,
            FilterId::Triangles => return None,
            FilterId::DegreeTPlusOneIsolation => CheckId::DegreeTPlusOneIsolation,
            FilterId::ClawFreeDegreeBounds => CheckId::ClawFreeDegreeBounds,
            FilterId::ClawFreeEightRegular => CheckId::ClawFreeEightRegular,
            FilterId::ComplementShape => CheckId::ComplementShape,
            FilterId::DegreeTPlusOneNeighbors => CheckId::DegreeTPlusOneNeighbors,
            FilterId::CliqueBound => CheckId::CliqueBound,
            FilterId::NonNeighborhoodOddCycle => CheckId::NonNeighborhoodOddCycle,
        })
    }

    /// Parse a comma-separated list such as `a,c,f`.
    pub fn parse_list(s: &str) -> Result<Vec<FilterId>, UnknownCheck> {
        s.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
    }
}

impl fmt::Display for FilterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

impl FromStr for FilterId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, UnknownCheck> {
        FilterId::COST_ORDER.into_iter().find(|f| f.short() == s).ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FilterOutcome {
    Reject { filter: FilterId, witness: Option<Witness> },
    Survive,
    /// Some filter ran out of colouring budget before deciding.
    Exhausted { filter: FilterId },
}

/// Run `filters` in order against the hypothesis that `g` is a non-complete
/// double-critical graph with χ = `t`. The suite's engine supplies (and
/// charges) any colouring work.
pub fn filter_pipeline(suite: &mut PropertySuite, g: &Graph, t: usize, filters: &[FilterId]) -> FilterOutcome {
    let premise = Premise::assumed(g, t);
    for &f in filters {
        let outcome = match f.check() {
            Some(id) => suite.run_check(g, &premise, id).expect("graph-level check"),
            None => {
                if let Some((x, y)) = g.edges().find(|&(x, y)| (g.neighbors(x) & g.neighbors(y)).len() + 2 < t) {
                    let triangles = (g.neighbors(x) & g.neighbors(y)).len();
                    return FilterOutcome::Reject { filter: f, witness: Some(Witness::FewTriangles { x, y, triangles }) };
                }
                continue;
            }
        };
        match outcome.verdict {
            Verdict::Fail => return FilterOutcome::Reject { filter: f, witness: outcome.witness },
            Verdict::Inconclusive => return FilterOutcome::Exhausted { filter: f },
            Verdict::Pass | Verdict::VacuousPass => {}
        }
    }
    FilterOutcome::Survive
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn run(g: &Graph, t: usize) -> FilterOutcome {
        filter_pipeline(&mut PropertySuite::default(), g, t, &FilterId::COST_ORDER)
    }

    #[test]
    fn examples() {
        assert!(matches!(run(&families::cycle(5), 3), FilterOutcome::Reject { filter: FilterId::MinDegree, .. }));
        let p = families::petersen();
        let o = filter_pipeline(&mut PropertySuite::default(), &p, 3, &[FilterId::Triangles]);
        assert!(matches!(o, FilterOutcome::Reject { filter: FilterId::Triangles, .. }));
        let g = families::complete_minus_perfect_matching(8);
        let o = filter_pipeline(&mut PropertySuite::default(), &g, 4, &[FilterId::MinDegree, FilterId::Triangles]);
        assert_eq!(o, FilterOutcome::Survive);
    }

    #[test]
    fn parse_ids() {
        let all = FilterId::parse_list("a,c,f,i,j,cor15,l25,claim1").unwrap();
        assert_eq!(all.len(), 8);
        assert!(FilterId::parse_list("a,zz").is_err());
        assert_eq!(serde_json::to_string(&FilterId::DegreeTPlusOneIsolation).unwrap(), "\"cor15\"");
    }
}
