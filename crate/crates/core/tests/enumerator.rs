use std::collections::HashSet;
use std::time::Instant;

use dcgraph::graph6;
use dcgraph::search::{canonical_form, enumerate_connected_graphs};
use dcgraph::Graph;

/// Heap's algorithm over all permutations of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn connected(n: usize, adj: &[Vec<bool>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Isomorphism classes of connected labelled graphs, deduplicated by the
/// largest edge-bit string over all vertex permutations.
fn brute_force_count(n: usize) -> usize {
    let ps = pairs(n);
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for mask in 0u64..(1 << ps.len()) {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in ps.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        if !connected(n, &adj) {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| ps.iter().map(|&(i, j)| adj[p[i]][p[j]]).collect::<Vec<_>>())
            .max()
            .unwrap();
        classes.insert(key);
    }
    classes.len()
}

#[test]
fn counts_match_brute_force_up_to_six() {
    for n in 1..=6 {
        assert_eq!(enumerate_connected_graphs(n).unwrap().len(), brute_force_count(n), "n = {n}");
    }
}

#[test]
fn counts_match_published_sequence() {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853, 11117]);
    eprintln!("enumerated n <= 8 in {:?}", start.elapsed());
}

#[test]
fn representatives_are_canonical_connected_and_distinct() {
    let graphs = enumerate_connected_graphs(7).unwrap();
    let mut seen = HashSet::new();
    for g in &graphs {
        assert!(g.is_connected().unwrap());
        assert_eq!(&canonical_form(g), g);
        assert!(seen.insert(graph6::encode_graph6(g)));
    }
}

#[test]
fn small_examples() {
    let three = enumerate_connected_graphs(3).unwrap();
    let sizes: Vec<usize> = three.iter().map(Graph::size).collect();
    assert_eq!(sizes.len(), 2);
    assert!(sizes.contains(&2) && sizes.contains(&3));
    assert_eq!(enumerate_connected_graphs(4).unwrap().len(), 6);
}
