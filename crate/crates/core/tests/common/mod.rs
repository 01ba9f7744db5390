//! Brute-force reference implementations, deliberately naive and sharing
//! no code with the library beyond basic adjacency queries on `Graph`.

#![allow(dead_code)]

use std::collections::HashSet;

use dcgraph::Graph;

/// Does some assignment in `k^n` colour `g` properly?
pub fn naive_colorable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut assign = vec![0usize; n];
    loop {
        let proper = (0..n).all(|u| (u + 1..n).all(|v| !g.has_edge(u, v) || assign[u] != assign[v]));
        if proper {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

pub fn naive_chromatic(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| naive_colorable(g, k)).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1 << n)).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

pub fn brute_clique_number(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_independence_number(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_claw_free(g: &Graph) -> bool {
    let n = g.order();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    let leaves = [a, b, d];
                    if leaves.contains(&c) || !leaves.iter().all(|&l| g.has_edge(c, l)) {
                        continue;
                    }
                    if !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Proper colourings with at most `k` colours, counted up to relabelling by
/// collecting the induced partitions.
pub fn brute_coloring_count(g: &Graph, k: usize) -> usize {
    let n = g.order();
    let mut partitions = HashSet::new();
    let total = (k as u64).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let assign: Vec<usize> = (0..n)
            .map(|_| {
                let d = (c % k as u64) as usize;
                c /= k as u64;
                d
            })
            .collect();
        if (0..n).any(|u| (u + 1..n).any(|v| g.has_edge(u, v) && assign[u] == assign[v])) {
            continue;
        }
        let mut classes: Vec<Vec<usize>> = (0..k).map(|col| (0..n).filter(|&v| assign[v] == col).collect()).collect();
        classes.retain(|c| !c.is_empty());
        classes.sort();
        partitions.insert(classes);
    }
    partitions.len()
}

/// Isomorphic iff some permutation maps one edge set onto the other.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    fn go(g: &Graph, h: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = perm.len();
        if i == g.order() {
            return true;
        }
        for v in 0..g.order() {
            if used[v] || (0..i).any(|u| g.has_edge(u, i) != h.has_edge(perm[u], v)) {
                continue;
            }
            used[v] = true;
            perm.push(v);
            if go(g, h, perm, used) {
                return true;
            }
            perm.pop();
            used[v] = false;
        }
        false
    }
    go(g, h, &mut Vec::new(), &mut vec![false; n])
}

/// Double-critical by definition: connected, and every edge deletion
/// lowers the naive chromatic number by exactly two.
pub fn brute_double_critical(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    let t = naive_chromatic(g);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (v, s) in seen.iter_mut().enumerate() {
            if g.has_edge(u, v) && !*s {
                *s = true;
                stack.push(v);
            }
        }
    }
    if seen.contains(&false) {
        return false;
    }
    g.edges().all(|(x, y)| {
        let keep: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
        let sub = Graph::from_fn(keep.len(), |i, j| g.has_edge(keep[i], keep[j])).unwrap();
        naive_chromatic(&sub) + 2 == t
    })
}
