//! Isomorph-free generation of small connected graphs.
//!
//! Every connected graph on n vertices has a vertex whose deletion leaves it
//! connected, so extending each connected (n−1)-vertex representative by a
//! new vertex joined to every nonempty subset reaches every class. Classes
//! are deduplicated by the minimum adjacency code over all vertex orders.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

/// Largest order the enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("refusing to enumerate n = {0} (maximum {MAX_ENUMERATION_ORDER}); use an external corpus")]
pub struct EnumerationTooLarge(pub usize);

/// Column of the adjacency code contributed by placing `v` after `placed`:
/// x(0,j), …, x(j−1,j) with the first entry most significant. Columns in
/// placement order follow the bit order of graph6.
fn column(g: &Graph, placed: &[usize], v: usize) -> u64 {
    placed.iter().fold(0, |acc, &u| (acc << 1) | g.has_edge(u, v) as u64)
}

struct Canon<'a> {
    g: &'a Graph,
    placed: Vec<usize>,
    code: Vec<u64>,
    best: Vec<u64>,
    best_perm: Vec<usize>,
}

impl Canon<'_> {
    fn search(&mut self, free: u64) {
        let j = self.placed.len();
        if j == self.g.order() {
            if self.best_perm.is_empty() || self.code < self.best {
                self.best.clone_from(&self.code);
                self.best_perm.clone_from(&self.placed);
            }
            return;
        }
        let mut cols: Vec<(u64, usize)> = (0..self.g.order())
            .filter(|&v| free >> v & 1 == 1)
            .map(|v| (column(self.g, &self.placed, v), v))
            .collect();
        let min = cols.iter().map(|&(c, _)| c).min().unwrap();
        cols.retain(|&(c, _)| c == min);
        for (c, v) in cols {
            self.placed.push(v);
            self.code.push(c);
            if self.best_perm.is_empty() || self.code[..] <= self.best[..=j] {
                self.search(free & !(1 << v));
            }
            self.placed.pop();
            self.code.pop();
        }
    }
}

/// The vertex order achieving the minimum adjacency code, and that code.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, Vec<u64>) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut c = Canon { g, placed: Vec::with_capacity(n), code: Vec::with_capacity(n), best: Vec::new(), best_perm: Vec::new() };
    c.search(if n == 64 { u64::MAX } else { (1 << n) - 1 });
    (c.best_perm, c.best)
}

/// `g` relabelled so its graph6 string is the minimum over all labellings.
/// Two graphs are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Graph {
    let (order, _) = canonical_labeling(g);
    // order[i] is the old vertex placed at position i
    let mut perm = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.permuted(&perm)
}

/// One representative (in canonical form) per isomorphism class of
/// connected graphs on `n` vertices, sorted by graph6 string.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerationTooLarge> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationTooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1).expect("n = 1")];
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for g in &level {
            for mask in 1..(1u64 << (m - 1)) {
                let mut rows = g.rows().to_vec();
                for (u, row) in rows.iter_mut().enumerate() {
                    if mask >> u & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                rows.push(mask);
                let h = Graph::from_rows(rows).expect("symmetric extension");
                next.insert(crate::graph6::encode_graph6(&canonical_form(&h)));
            }
        }
        level = next.into_iter().map(|s| crate::graph6::parse(&s).expect("own encoding")).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(enumerate_connected_graphs(9).is_err());
        assert!(enumerate_connected_graphs(0).unwrap().is_empty());
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let p = families::petersen();
        let c = canonical_form(&p);
        let perm = [3, 7, 1, 9, 0, 2, 8, 6, 4, 5];
        assert_eq!(canonical_form(&p.permuted(&perm)), c);
        assert_ne!(canonical_form(&families::cycle(6)), canonical_form(&families::complete_bipartite(3, 3)));
    }
}
