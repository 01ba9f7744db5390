//! Small named graphs. All constructors panic above 64 vertices.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("named graph fits in 64 vertices")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true).expect("n <= 64")
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n).expect("n <= 64")
}

/// C_n with vertices in cycle order. For n < 3 this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1 || (n >= 3 && i == 0 && j == n - 1)).expect("n <= 64")
}

/// P_n on vertices 0..n in path order.
pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1).expect("n <= 64")
}

/// K_{1,k}, center 0.
pub fn star(k: usize) -> Graph {
    Graph::from_fn(k + 1, |i, _| i == 0).expect("k < 64")
}

/// Hub 0 joined to a rim C_k on 1..=k.
pub fn wheel(k: usize) -> Graph {
    Graph::from_fn(k + 1, |i, j| i == 0 || j == i + 1 || (i == 1 && j == k)).expect("k < 64")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_fn(a + b, |i, j| i < a && j >= a).expect("a + b <= 64")
}

/// K_n minus the matching {0,1}, {2,3}, …; `n` must be even.
pub fn complete_minus_perfect_matching(n: usize) -> Graph {
    assert!(n.is_multiple_of(2), "perfect matching needs an even vertex count");
    Graph::from_fn(n, |i, j| !(i % 2 == 0 && j == i + 1)).expect("n <= 64")
}

/// Outer 5-cycle 0..5, spokes i–i+5, inner pentagram on 5..10.
pub fn petersen() -> Graph {
    build(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
}

/// Mycielskian of C_5: the 5-cycle 0..5, shadows 5..10 (shadow i+5 joined to
/// the cycle neighbours of i), and hub 10 joined to every shadow.
pub fn grotzsch() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        edges.push((i, j));
        edges.push((i + 5, j));
        edges.push((j + 5, i));
        edges.push((i + 5, 10));
    }
    build(11, &edges)
}

/// Disjoint union, second graph relabelled after the first.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let na = a.order();
    Graph::from_fn(na + b.order(), |i, j| {
        if j < na {
            a.has_edge(i, j)
        } else if i >= na {
            b.has_edge(i - na, j - na)
        } else {
            false
        }
    })
    .expect("union fits in 64 vertices")
}

/// Join: disjoint union plus every edge between the two parts.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let na = a.order();
    Graph::from_fn(na + b.order(), |i, j| {
        if j < na {
            a.has_edge(i, j)
        } else if i >= na {
            b.has_edge(i - na, j - na)
        } else {
            true
        }
    })
    .expect("join fits in 64 vertices")
}
