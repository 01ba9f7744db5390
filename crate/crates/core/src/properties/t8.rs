//! The configuration around an edge `xy` of an 8-chromatic claw-free graph,
//! and the claims made about it.
//!
//! Take `x`, a neighbour `y` with |N(x) ∩ N(y)| = 6, and a proper 6-colouring
//! of G \ {x, y}. Each class V_i holds exactly one common neighbour v_i, and
//! exactly three classes also hold a second neighbour u_i of `x`. With those
//! three classes first (ascending), A = {u_1, u_2, u_3}, B = {v_1, v_2, v_3}
//! and C = {v_4, v_5, v_6}.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{CheckError, CheckId, CheckOutcome, Premise, PropertySuite, Witness};
use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};
use crate::structure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigurationError {
    #[error("{x}-{y} is not an edge")]
    NotAnEdge { x: usize, y: usize },
    #[error("|N(x) ∩ N(y)| = {0}, expected 6")]
    CommonNeighbors(usize),
    #[error("coloring has {0} classes, expected 6")]
    ClassCount(usize),
    #[error("class {class} holds {count} common neighbours, expected 1")]
    CommonPerClass { class: usize, count: usize },
    #[error("class {class} holds {count} neighbours of x, expected 1 or 2")]
    NeighborsPerClass { class: usize, count: usize },
    #[error("{0} classes hold a second neighbour of x, expected 3")]
    DoubledClasses(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EightConfiguration {
    pub x: usize,
    pub y: usize,
    /// u_1, u_2, u_3.
    pub a: [usize; 3],
    /// v_1, v_2, v_3, paired with `a`.
    pub b: [usize; 3],
    /// v_4, v_5, v_6.
    pub c: [usize; 3],
}

impl EightConfiguration {
    /// Read the configuration off a colouring of G \ {x, y}.
    pub fn derive(g: &Graph, x: usize, y: usize, coloring: &Coloring) -> Result<Self, CheckError> {
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        if !g.has_edge(x, y) {
            return Err(ConfigurationError::NotAnEdge { x, y }.into());
        }
        coloring.verify_on(g, g.vertices().without(x).without(y), 6)?;
        let w = g.neighbors(x) & g.neighbors(y);
        if w.len() != 6 {
            return Err(ConfigurationError::CommonNeighbors(w.len()).into());
        }
        if coloring.num_colors() != 6 {
            return Err(ConfigurationError::ClassCount(coloring.num_colors()).into());
        }
        let mut doubled = Vec::new();
        let mut single = Vec::new();
        for (i, &class) in coloring.classes().iter().enumerate() {
            let common = class & w;
            if common.len() != 1 {
                return Err(ConfigurationError::CommonPerClass { class: i + 1, count: common.len() }.into());
            }
            let v = common.first().unwrap();
            let rest = (class & g.neighbors(x)).without(v);
            match rest.len() {
                0 => single.push(v),
                1 => doubled.push((rest.first().unwrap(), v)),
                n => return Err(ConfigurationError::NeighborsPerClass { class: i + 1, count: n + 1 }.into()),
            }
        }
        if doubled.len() != 3 {
            return Err(ConfigurationError::DoubledClasses(doubled.len()).into());
        }
        Ok(EightConfiguration {
            x,
            y,
            a: [doubled[0].0, doubled[1].0, doubled[2].0],
            b: [doubled[0].1, doubled[1].1, doubled[2].1],
            c: [single[0], single[1], single[2]],
        })
    }

    fn set(vs: [usize; 3]) -> VertexSet {
        vs.into_iter().collect()
    }

    pub fn a_set(&self) -> VertexSet {
        Self::set(self.a)
    }

    pub fn b_set(&self) -> VertexSet {
        Self::set(self.b)
    }

    pub fn c_set(&self) -> VertexSet {
        Self::set(self.c)
    }
}

impl PropertySuite {
    fn eight_gate(p: &Premise) -> bool {
        p.counterexample() && p.claw_free && p.t == 8
    }

    /// The complement of N(x) is not 2-regular.
    pub fn not_two_regular_at(&mut self, g: &Graph, p: &Premise, x: usize) -> Result<CheckOutcome, CheckError> {
        let prof = structure::neighborhood_complement_profile(g, x)?;
        let mut run = self.start(CheckId::ClawFreeEightNotTwoRegular, Self::eight_gate(p));
        if run.gate() {
            run.premise_held();
            run.unit();
            let (min, max) = (prof.min_degree().unwrap_or(0), prof.max_degree().unwrap_or(0));
            if min == 2 && max == 2 {
                run.fail(Witness::ComplementDegrees { center: x, min, max });
            }
        }
        Ok(self.finish(run, p))
    }

    pub fn claw_free_eight_not_two_regular(&mut self, g: &Graph, p: &Premise) -> CheckOutcome {
        let mut run = self.start(CheckId::ClawFreeEightNotTwoRegular, Self::eight_gate(p));
        if run.gate() {
            run.premise_held();
            for x in g.vertices() {
                run.unit();
                let prof = structure::neighborhood_complement_profile(g, x).expect("vertex in range");
                if prof.min_degree() == Some(2) && prof.max_degree() == Some(2) {
                    run.fail(Witness::ComplementDegrees { center: x, min: 2, max: 2 });
                    break;
                }
            }
        }
        self.finish(run, p)
    }

    /// Some vertex of B misses some vertex of C.
    pub fn b_not_complete_to_c(&mut self, g: &Graph, p: &Premise, cfg: &EightConfiguration) -> CheckOutcome {
        let mut run = self.start(CheckId::ClawFreeEightBNotCompleteToC, Self::eight_gate(p));
        if run.gate() {
            run.premise_held();
            run.unit();
            let missing = cfg.b.iter().find_map(|&u| cfg.c.iter().find(|&&v| !g.has_edge(u, v)).map(|&v| (u, v)));
            match missing {
                Some((x, y)) => run.evidence(Witness::NonEdge { x, y }),
                None => run.fail(Witness::Vertices { vertices: cfg.b_set() | cfg.c_set() }),
            }
        }
        self.finish(run, p)
    }

    /// G[C] is a triangle.
    pub fn c_is_triangle(&mut self, g: &Graph, p: &Premise, cfg: &EightConfiguration) -> CheckOutcome {
        let mut run = self.start(CheckId::ClawFreeEightCTriangle, Self::eight_gate(p));
        if run.gate() {
            run.premise_held();
            run.unit();
            let [a, b, c] = cfg.c;
            if let Some(&(x, y)) = [(a, b), (a, c), (b, c)].iter().find(|&&(u, v)| !g.has_edge(u, v)) {
                run.fail(Witness::NonEdge { x, y });
            }
        }
        self.finish(run, p)
    }

    /// The non-edges of G inside A ∪ B are exactly u_i v_i.
    pub fn ab_matching(&mut self, g: &Graph, p: &Premise, cfg: &EightConfiguration) -> CheckOutcome {
        let mut run = self.start(CheckId::ClawFreeEightAbMatching, Self::eight_gate(p));
        if run.gate() {
            run.premise_held();
            let ab: Vec<usize> = cfg.a.iter().chain(&cfg.b).copied().collect();
            let matched = |u: usize, v: usize| (0..3).any(|i| (cfg.a[i], cfg.b[i]) == (u, v) || (cfg.a[i], cfg.b[i]) == (v, u));
            'outer: for (k, &u) in ab.iter().enumerate() {
                for &v in &ab[k + 1..] {
                    run.unit();
                    if g.has_edge(u, v) == matched(u, v) {
                        let w = if g.has_edge(u, v) { Witness::Edge { x: u, y: v } } else { Witness::NonEdge { x: u, y: v } };
                        run.fail(w);
                        break 'outer;
                    }
                }
            }
        }
        self.finish(run, p)
    }
}
