use std::ops::ControlFlow;

use super::{CheckError, CheckId, CheckOutcome, Premise, PremiseSource, PropertySuite, Verdict, Witness};
use crate::coloring::{for_each_coloring, BudgetExhausted, Coloring};
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};
use crate::structure::{self, ComponentShape};

/// Accumulates the state of one checker run.
pub(super) struct Run {
    id: CheckId,
    gate: bool,
    applicable: bool,
    failure: Option<Witness>,
    evidence: Option<Witness>,
    inconclusive: bool,
    truncated: bool,
    units: u64,
    nodes_at_start: u64,
    note: Option<String>,
}

impl Run {
    pub(super) fn fail(&mut self, w: Witness) {
        if self.failure.is_none() {
            self.failure = Some(w);
        }
    }

    pub(super) fn done(&self) -> bool {
        self.failure.is_some() || self.inconclusive
    }

    pub(super) fn gate(&self) -> bool {
        self.gate
    }

    pub(super) fn premise_held(&mut self) {
        self.applicable = true;
    }

    pub(super) fn unit(&mut self) {
        self.units += 1;
    }

    pub(super) fn evidence(&mut self, w: Witness) {
        self.evidence.get_or_insert(w);
    }

    pub(super) fn budget<T>(&mut self, r: Result<T, BudgetExhausted>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.inconclusive = true;
                self.note = Some(e.to_string());
                None
            }
        }
    }
}

fn neighborhood_of(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v))
}

fn check_edge(g: &Graph, x: usize, y: usize) -> Result<(), GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if !g.has_edge(x, y) {
        return Err(GraphError::NotAnEdge(format!("{x}-{y}")));
    }
    Ok(())
}

fn deletion_domain(g: &Graph, x: usize, y: usize) -> VertexSet {
    g.vertices().without(x).without(y)
}

fn class_of(c: &Coloring, i: usize) -> VertexSet {
    c.class(i).unwrap_or_default()
}

/// Both orientations of every edge.
fn ordered_edges(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges().flat_map(|(x, y)| [(x, y), (y, x)])
}

/// Smallest sufficient degree for `y` when `y` lies on a `k`-cycle of the
/// complement of N(x) and that complement has `e` edges.
pub fn cycle_degree_bound(t: usize, k: usize, e: usize) -> Option<usize> {
    match k {
        0..=4 => None,
        5 => Some((t + 2).max((t + e).saturating_sub(6))),
        6 => Some((t + 2).max((t + e).saturating_sub(5))),
        _ => Some((t + e).saturating_sub(4)),
    }
}

/// Layered search for x, v_1, …, v_i, y with v_k in class `sequence[k]`.
/// Returns the path, or `None` if it does not exist.
pub fn find_rainbow_path(g: &Graph, x: usize, y: usize, coloring: &Coloring, sequence: &[usize]) -> Option<Vec<usize>> {
    let mut layers = Vec::with_capacity(sequence.len());
    let mut frontier = g.neighbors(x);
    for &c in sequence {
        let layer = frontier & class_of(coloring, c);
        layers.push(layer);
        frontier = neighborhood_of(g, layer);
    }
    let mut at = (layers.last().copied().unwrap_or(VertexSet::singleton(x)) & g.neighbors(y)).first()?;
    let mut path = vec![y, at];
    for layer in layers.iter().rev().skip(1) {
        at = (*layer & g.neighbors(at)).first()?;
        path.push(at);
    }
    path.push(x);
    path.reverse();
    Some(path)
}

/// First sequence of distinct colours from `1..=m` with no rainbow path,
/// walking the sequence tree depth-first.
fn missing_rainbow_sequence(g: &Graph, x: usize, y: usize, c: &Coloring, m: usize, units: &mut u64) -> Option<Vec<usize>> {
    fn go(g: &Graph, y: usize, c: &Coloring, m: usize, frontier: VertexSet, seq: &mut Vec<usize>, units: &mut u64) -> bool {
        for col in 1..=m {
            if seq.contains(&col) {
                continue;
            }
            *units += 1;
            let layer = frontier & class_of(c, col);
            seq.push(col);
            if layer.is_disjoint(g.neighbors(y)) || !go(g, y, c, m, neighborhood_of(g, layer), seq, units) {
                return false;
            }
            seq.pop();
        }
        true
    }
    let mut seq = Vec::new();
    if go(g, y, c, m, g.neighbors(x), &mut seq, units) {
        None
    } else {
        Some(seq)
    }
}

/// Is some vertex of (N(y) \ N(x)) ∩ V_i adjacent to N(x) ∩ V_j? `None` if
/// the local premise (N(x) ∩ N(y) ∩ V_i anticomplete to N(x) ∩ V_j) fails.
fn kempe_instance(g: &Graph, x: usize, y: usize, c: &Coloring, i: usize, j: usize) -> Option<Option<(usize, usize)>> {
    let (vi, vj) = (class_of(c, i), class_of(c, j));
    let target = g.neighbors(x) & vj;
    let common = g.neighbors(x) & g.neighbors(y) & vi;
    if !neighborhood_of(g, common).is_disjoint(target) {
        return None;
    }
    let source = (g.neighbors(y) - g.neighbors(x)) & vi;
    Some(source.iter().find_map(|u| (g.neighbors(u) & target).first().map(|v| (u, v))))
}

impl PropertySuite {
    pub(super) fn start(&self, id: CheckId, gate: bool) -> Run {
        Run {
            id,
            gate,
            applicable: false,
            failure: None,
            evidence: None,
            inconclusive: false,
            truncated: false,
            units: 0,
            nodes_at_start: self.engine.total_nodes(),
            note: None,
        }
    }

    pub(super) fn finish(&self, run: Run, p: &Premise) -> CheckOutcome {
        let applicable = run.gate && run.applicable;
        let mut note = run.note;
        let (verdict, witness) = if !applicable {
            (Verdict::VacuousPass, None)
        } else if let Some(w) = run.failure {
            (Verdict::Fail, Some(w))
        } else if run.inconclusive {
            (Verdict::Inconclusive, None)
        } else if run.truncated && !self.config.accept_truncated {
            note = Some(format!("coloring enumeration truncated at {}", self.config.enumeration_cap));
            (Verdict::Inconclusive, run.evidence)
        } else {
            (Verdict::Pass, run.evidence)
        };
        if verdict == Verdict::Fail && p.source == PremiseSource::Assumed {
            note = Some("double-critical premise was assumed, not verified".into());
        }
        CheckOutcome {
            id: run.id,
            applicable,
            verdict,
            witness,
            cost: run.units + (self.engine.total_nodes() - run.nodes_at_start),
            premise_source: p.source,
            truncated: run.truncated,
            note,
        }
    }

    /// Visit the colourings of G \ {x, y} with at most t − 2 colours, up to
    /// the enumeration cap.
    fn deletion_colorings(&self, g: &Graph, p: &Premise, x: usize, y: usize, run: &mut Run, mut visit: impl FnMut(&Coloring, &mut Run) -> ControlFlow<()>) {
        let cap = self.config.enumeration_cap;
        let mut seen = 0usize;
        let _ = for_each_coloring(g, deletion_domain(g, x, y), p.t.saturating_sub(2), |c| {
            if seen == cap {
                run.truncated = true;
                return ControlFlow::Break(());
            }
            seen += 1;
            visit(c, run)
        });
    }

    pub fn clique_bound(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::CliqueBound, p.counterexample());
        if run.gate && p.t >= 1 {
            run.premise_held();
            run.unit();
            if let Some(Some(k)) = run.budget(self.engine.find_clique_within(g, g.vertices(), p.t - 1)) {
                run.fail(Witness::Clique { vertices: k });
            }
        }
        self.finish(run, p)
    }

    pub fn rainbow_paths(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::RainbowPaths, p.double_critical());
        if run.gate {
            let m = p.t.saturating_sub(2);
            for (x, y) in ordered_edges(g) {
                self.deletion_colorings(g, p, x, y, &mut run, |c, run| {
                    if m > 0 {
                        run.premise_held();
                    }
                    let mut units = 0;
                    let missing = missing_rainbow_sequence(g, x, y, c, m, &mut units);
                    run.units += units;
                    match missing {
                        Some(sequence) => {
                            run.fail(Witness::MissingRainbowPath { x, y, sequence, coloring: c.clone() });
                            ControlFlow::Break(())
                        }
                        None => ControlFlow::Continue(()),
                    }
                });
                if run.done() {
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    /// One instance: a rainbow path for `sequence` between the ends of `xy`
    /// under a (t−2)-colouring of G \ {x, y}.
    pub fn rainbow_path(&mut self, g: &Graph, p: &Premise, x: usize, y: usize, coloring: &Coloring, sequence: &[usize]) -> Result<CheckOutcome, CheckError> {
        check_edge(g, x, y)?;
        let m = p.t.saturating_sub(2);
        coloring.verify_on(g, deletion_domain(g, x, y), m)?;
        if sequence.is_empty() {
            return Err(CheckError::Sequence("empty".into()));
        }
        for (k, &c) in sequence.iter().enumerate() {
            if c == 0 || c > m {
                return Err(CheckError::Sequence(format!("color {c} outside 1..={m}")));
            }
            if sequence[..k].contains(&c) {
                return Err(CheckError::Sequence(format!("color {c} repeated")));
            }
        }
        let mut run = self.start(CheckId::RainbowPaths, p.double_critical());
        if run.gate {
            run.premise_held();
            run.unit();
            match find_rainbow_path(g, x, y, coloring, sequence) {
                Some(path) => run.evidence(Witness::RainbowPath { path }),
                None => run.fail(Witness::MissingRainbowPath { x, y, sequence: sequence.to_vec(), coloring: coloring.clone() }),
            }
        }
        Ok(self.finish(run, p))
    }

    fn common_neighbor_instance(g: &Graph, p: &Premise, x: usize, y: usize, c: &Coloring, run: &mut Run) {
        let common = g.neighbors(x) & g.neighbors(y);
        for class in 1..=p.t.saturating_sub(2) {
            run.unit();
            if class_of(c, class).is_disjoint(common) {
                run.fail(Witness::ClassWithoutCommonNeighbor { x, y, class, coloring: c.clone() });
                return;
            }
        }
    }

    pub fn common_neighbor_per_class(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::CommonNeighborPerClass, p.double_critical());
        if run.gate {
            for (x, y) in g.edges() {
                run.premise_held();
                let triangles = (g.neighbors(x) & g.neighbors(y)).len();
                if triangles + 2 < p.t {
                    run.fail(Witness::FewTriangles { x, y, triangles });
                    break;
                }
                self.deletion_colorings(g, p, x, y, &mut run, |c, run| {
                    Self::common_neighbor_instance(g, p, x, y, c, run);
                    if run.done() {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if run.done() {
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    pub fn common_neighbors(&mut self, g: &Graph, p: &Premise, x: usize, y: usize, coloring: &Coloring) -> Result<CheckOutcome, CheckError> {
        check_edge(g, x, y)?;
        coloring.verify_on(g, deletion_domain(g, x, y), p.t.saturating_sub(2))?;
        let mut run = self.start(CheckId::CommonNeighborPerClass, p.double_critical());
        if run.gate {
            run.premise_held();
            let triangles = (g.neighbors(x) & g.neighbors(y)).len();
            if triangles + 2 < p.t {
                run.fail(Witness::FewTriangles { x, y, triangles });
            } else {
                Self::common_neighbor_instance(g, p, x, y, coloring, &mut run);
            }
        }
        Ok(self.finish(run, p))
    }

    pub fn edge_with_common_non_neighbor(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::EdgeWithCommonNonNeighbor, p.counterexample());
        if run.gate {
            run.premise_held();
            let found = g.edges().find_map(|(x, y)| {
                run.unit();
                (g.vertices() - g.closed_neighbors(x) - g.closed_neighbors(y)).first().map(|z| (x, y, z))
            });
            match found {
                Some((x, y, z)) => run.evidence(Witness::CommonNonNeighbor { x, y, z }),
                None => run.fail(Witness::NoEdgeWithCommonNonNeighbor { edges_checked: g.size() }),
            }
        }
        self.finish(run, p)
    }

    fn private_neighbor_instance(g: &Graph, x: usize, y: usize, run: &mut Run) {
        run.unit();
        let private = g.neighbors(x) - g.closed_neighbors(y);
        if let Some(z) = private.iter().find(|&z| g.neighbors(z).is_disjoint(private)) {
            run.fail(Witness::IsolatedPrivateNeighbor { x, y, z });
        }
    }

    pub fn private_neighbors_not_isolated(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::PrivateNeighborsNotIsolated, p.counterexample());
        if run.gate {
            run.premise_held();
            for (x, y) in ordered_edges(g) {
                Self::private_neighbor_instance(g, x, y, &mut run);
                if run.done() {
                    break;
                }
            }
            // same statement read in the complement of N(x): no vertex of degree one
            if !run.done() {
                for (x, z) in ordered_edges(g) {
                    if (g.neighbors(x) - g.closed_neighbors(z)).len() == 1 {
                        run.fail(Witness::ComplementDegreeOne { x, z });
                        break;
                    }
                }
            }
        }
        self.finish(run, p)
    }

    pub fn private_neighbors(&mut self, g: &Graph, p: &Premise, x: usize, y: usize) -> Result<CheckOutcome, CheckError> {
        check_edge(g, x, y)?;
        let mut run = self.start(CheckId::PrivateNeighborsNotIsolated, p.counterexample());
        if run.gate {
            run.premise_held();
            Self::private_neighbor_instance(g, x, y, &mut run);
        }
        Ok(self.finish(run, p))
    }

    pub fn min_degree(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::MinDegree, p.counterexample());
        if run.gate {
            run.premise_held();
            run.units += g.order() as u64;
            if let Some(v) = g.vertices().iter().min_by_key(|&v| (g.degree(v), v)) {
                if g.degree(v) < p.t + 1 {
                    run.fail(Witness::Degree { vertex: v, degree: g.degree(v) });
                }
            }
        }
        self.finish(run, p)
    }

    pub fn neighborhood_independence(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::NeighborhoodIndependence, p.counterexample());
        if run.gate {
            run.premise_held();
            let co = g.complement();
            for x in g.vertices() {
                run.unit();
                let Some(alpha) = run.budget(self.engine.max_clique_within(&co, g.neighbors(x))) else { break };
                if alpha.len() + p.t > g.degree(x) + 1 {
                    run.fail(Witness::IndependentNeighbors { vertex: x, set: alpha });
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    pub fn neighborhood_chromatic(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::NeighborhoodChromatic, p.counterexample());
        if run.gate {
            for x in g.vertices().iter().filter(|&x| !g.is_dominating(x)) {
                run.premise_held();
                run.unit();
                let Some((chi, _)) = run.budget(self.engine.chromatic_number_within(g, g.neighbors(x))) else { break };
                if chi + 3 > p.t {
                    run.fail(Witness::NeighborhoodColoring { vertex: x, chi });
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    pub fn complement_shape(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::ComplementShape, p.counterexample());
        if run.gate {
            for x in g.vertices().iter().filter(|&x| g.degree(x) == p.t + 1) {
                run.premise_held();
                run.unit();
                let prof = structure::neighborhood_complement_profile(g, x).expect("vertex in range");
                if !prof.conforming {
                    run.fail(Witness::Components { center: x, components: prof.components });
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    pub fn low_degree_independent(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::LowDegreeIndependent, p.counterexample());
        if run.gate {
            run.premise_held();
            run.units += g.size() as u64;
            let low = p.t + 1;
            if let Some((x, y)) = g.edges().find(|&(x, y)| g.degree(x) == low && g.degree(y) == low) {
                run.fail(Witness::AdjacentDegrees { x, y, dx: low, dy: low });
            }
        }
        self.finish(run, p)
    }

    pub fn dominating_vertex_reduction(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::DominatingVertexReduction, p.double_critical());
        if run.gate && g.order() > 1 {
            for x in g.vertices().iter().filter(|&x| g.is_dominating(x)) {
                run.premise_held();
                run.unit();
                let sub = super::reduce_dominating_vertex(g, x).expect("dominating");
                let v = match super::oracle_with(&mut self.engine, &sub) {
                    Ok(v) => v,
                    Err(super::OracleError::Budget(e)) => {
                        run.budget::<()>(Err(e));
                        break;
                    }
                    Err(super::OracleError::Graph(e)) => panic!("reduction of a connected graph: {e}"),
                };
                if !v.is_double_critical || v.t + 1 != p.t {
                    run.fail(Witness::ReductionFailed { vertex: x, chi: v.t, double_critical: v.is_double_critical });
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    pub fn non_neighborhood_odd_cycle(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::NonNeighborhoodOddCycle, p.counterexample());
        if run.gate {
            for x in g.vertices().iter().filter(|&x| !g.is_dominating(x)) {
                run.premise_held();
                run.unit();
                let rest = g.vertices() - g.closed_neighbors(x);
                let Some((chi, _)) = run.budget(self.engine.chromatic_number_within(g, rest)) else { break };
                if chi < 3 || g.degree(x) + 4 > g.order() {
                    run.fail(Witness::NonNeighborhood { vertex: x, chi, degree: g.degree(x) });
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    fn kempe_classes(g: &Graph, p: &Premise, x: usize, y: usize, c: &Coloring, run: &mut Run) {
        let m = p.t.saturating_sub(2);
        for i in 1..=m {
            for j in (1..=m).filter(|&j| j != i) {
                run.unit();
                match kempe_instance(g, x, y, c, i, j) {
                    None => {}
                    Some(Some(_)) => run.premise_held(),
                    Some(None) => {
                        run.premise_held();
                        run.fail(Witness::KempeEdgeMissing { x, y, i, j, coloring: c.clone() });
                        return;
                    }
                }
            }
        }
    }

    pub fn kempe_edges(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::KempeEdge, p.double_critical());
        if run.gate {
            for (x, y) in ordered_edges(g) {
                self.deletion_colorings(g, p, x, y, &mut run, |c, run| {
                    Self::kempe_classes(g, p, x, y, c, run);
                    if run.done() {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if run.done() {
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    /// One instance: ordered edge `xy`, a (t−2)-colouring of G \ {x, y},
    /// and distinct classes `i`, `j`.
    #[allow(clippy::too_many_arguments)]
    pub fn kempe_edge(&mut self, g: &Graph, p: &Premise, x: usize, y: usize, coloring: &Coloring, i: usize, j: usize) -> Result<CheckOutcome, CheckError> {
        check_edge(g, x, y)?;
        let m = p.t.saturating_sub(2);
        coloring.verify_on(g, deletion_domain(g, x, y), m)?;
        if i == j {
            return Err(CheckError::SameClass(i));
        }
        for c in [i, j] {
            if c == 0 || c > m {
                return Err(CheckError::Sequence(format!("class {c} outside 1..={m}")));
            }
        }
        let mut run = self.start(CheckId::KempeEdge, p.double_critical());
        if run.gate {
            run.unit();
            match kempe_instance(g, x, y, coloring, i, j) {
                None => run.note = Some("local premise does not hold".into()),
                Some(Some((u, v))) => {
                    run.premise_held();
                    run.evidence(Witness::KempeEdgeFound { u, v });
                }
                Some(None) => {
                    run.premise_held();
                    run.fail(Witness::KempeEdgeMissing { x, y, i, j, coloring: coloring.clone() });
                }
            }
        }
        Ok(self.finish(run, p))
    }

    fn cycle_degree_instance(g: &Graph, p: &Premise, prof: &structure::NeighborhoodComplementProfile, y: usize, run: &mut Run) {
        let Some(ComponentShape::Cycle { length }) = prof.component_of(y).map(|c| c.shape.clone()) else { return };
        let Some(bound) = cycle_degree_bound(p.t, length, prof.edge_count) else { return };
        run.premise_held();
        run.unit();
        if g.degree(y) < bound {
            run.fail(Witness::CycleDegree { x: prof.center, y, cycle_length: length, degree: g.degree(y), bound });
        }
    }

    pub fn cycle_degree_bounds(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::CycleDegreeBounds, p.double_critical());
        if run.gate {
            'outer: for x in g.vertices().iter().filter(|&x| g.degree(x) == p.t + 1) {
                let prof = structure::neighborhood_complement_profile(g, x).expect("vertex in range");
                for y in prof.neighborhood {
                    Self::cycle_degree_instance(g, p, &prof, y, &mut run);
                    if run.done() {
                        break 'outer;
                    }
                }
            }
        }
        self.finish(run, p)
    }

    pub fn cycle_degree_bound_at(&mut self, g: &Graph, p: &Premise, x: usize, y: usize) -> Result<CheckOutcome, CheckError> {
        check_edge(g, x, y)?;
        let mut run = self.start(CheckId::CycleDegreeBounds, p.double_critical());
        if run.gate && g.degree(x) == p.t + 1 {
            let prof = structure::neighborhood_complement_profile(g, x)?;
            Self::cycle_degree_instance(g, p, &prof, y, &mut run);
        }
        Ok(self.finish(run, p))
    }

    pub fn claw_free_degree_bounds(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::ClawFreeDegreeBounds, p.double_critical() && p.claw_free && p.t >= 6);
        if run.gate {
            run.premise_held();
            for x in g.vertices() {
                run.unit();
                let d = g.degree(x);
                if d + 4 > 2 * p.t || (d + 1 < g.order() && d + 6 > 2 * p.t) {
                    run.fail(Witness::Degree { vertex: x, degree: d });
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    pub fn degree_t_plus_one_neighbors(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::DegreeTPlusOneNeighbors, p.counterexample() && p.t >= 6);
        if run.gate {
            'outer: for x in g.vertices().iter().filter(|&x| g.degree(x) == p.t + 1) {
                run.premise_held();
                run.unit();
                let prof = structure::neighborhood_complement_profile(g, x).expect("vertex in range");
                if prof.edge_count < 8 {
                    run.fail(Witness::ComplementEdgeCount { center: x, edges: prof.edge_count });
                    break;
                }
                for y in g.neighbors(x) {
                    run.unit();
                    let dy = g.degree(y);
                    if dy < p.t + 4 {
                        run.fail(Witness::AdjacentDegrees { x, y, dx: g.degree(x), dy });
                        break 'outer;
                    }
                    if dy == p.t + 4 {
                        let common = (g.neighbors(x) & g.neighbors(y)).len();
                        if common + 2 != p.t {
                            run.fail(Witness::CommonNeighborCount { x, y, common });
                            break 'outer;
                        }
                        let cycles = prof.cycle_lengths();
                        if !(cycles == [8] || cycles == [5, 5]) || prof.irregular_components().next().is_some() {
                            run.fail(Witness::CycleSpectrum { center: x, cycles });
                            break 'outer;
                        }
                    }
                }
            }
        }
        self.finish(run, p)
    }

    pub fn degree_t_plus_one_isolation(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::DegreeTPlusOneIsolation, p.counterexample() && p.t >= 6);
        if run.gate {
            run.premise_held();
            run.units += g.size() as u64;
            let found = ordered_edges(g).find(|&(x, y)| g.degree(x) == p.t + 1 && (p.t + 1..=p.t + 3).contains(&g.degree(y)));
            if let Some((x, y)) = found {
                run.fail(Witness::AdjacentDegrees { x, y, dx: g.degree(x), dy: g.degree(y) });
            }
        }
        self.finish(run, p)
    }

    pub fn claw_free_eight_regular(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::ClawFreeEightRegular, p.counterexample() && p.claw_free && p.t == 8);
        if run.gate {
            run.premise_held();
            for x in g.vertices() {
                run.unit();
                if g.degree(x) != 10 {
                    run.fail(Witness::Degree { vertex: x, degree: g.degree(x) });
                    break;
                }
                let prof = structure::neighborhood_complement_profile(g, x).expect("vertex in range");
                let (min, max) = (prof.min_degree().unwrap_or(0), prof.max_degree().unwrap_or(0));
                if min < 2 || max > 3 {
                    run.fail(Witness::ComplementDegrees { center: x, min, max });
                    break;
                }
            }
        }
        self.finish(run, p)
    }
}
