//! Small named graphs used as forbidden patterns.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("pattern edges are valid")
}

/// `P_t`: the path on `t` vertices, `0-1-…-(t-1)`.
pub fn path(t: usize) -> Graph {
    Graph::path(t)
}

/// `C_k`, `k >= 3`.
pub fn cycle(k: usize) -> Graph {
    Graph::cycle(k)
}

pub fn complete(t: usize) -> Graph {
    Graph::complete(t)
}

/// `K_{1,3}` with centre 0.
pub fn claw() -> Graph {
    Graph::star(3)
}

/// A claw with one edge subdivided once: centre 0, leaves 1, 2, and the
/// subdivided arm 0-3-4.
pub fn chair() -> Graph {
    build(5, &[(0, 1), (0, 2), (0, 3), (3, 4)])
}

/// `P4` 0-1-2-3 plus vertex 4 adjacent to both middle vertices.
pub fn bull() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])
}

/// `K_t ⋈ K̄_t`: clique `0..t`, independent set `t..2t`, and the perfect
/// matching `i` with `t+i`.
pub fn matched_clique(t: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            edges.push((i, j));
        }
        edges.push((i, t + i));
    }
    build(2 * t, &edges)
}
