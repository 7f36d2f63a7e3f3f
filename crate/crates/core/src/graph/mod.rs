//! Immutable simple graphs over dense ids, with the set-level predicates
//! (boundary, domination, components, cliques) the rest of the crate uses.
//!
//! Adjacency rows are [`VertexSet`]s, so neighbourhood intersections are
//! word-parallel. Everything iterates in ascending id order; results are
//! reproducible bit for bit.

mod io;
mod set;

pub use io::{parse_edge_list, write_edge_list};
pub use set::{Iter, VertexSet};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list; duplicates are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::new(); n];
        let mut count = 0;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                count += 1;
            }
        }
        Ok(Self { adj, edges: count })
    }

    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let edges = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self { adj, edges }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![VertexSet::new(); n])
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let rows = (0..n)
            .map(|v| {
                let mut r = VertexSet::full(n);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edge_list(leaves + 1, &edges).expect("valid star")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_subset(&self, x: &VertexSet) -> Result<()> {
        match x.max() {
            Some(v) if v >= self.n() => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    /// `N(X)`: vertices outside `x` with a neighbour in `x`.
    pub fn open_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out.difference(x)
    }

    /// `N[X] = N(X) ∪ X`.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| {
            let mut rest = x.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| !self.adj[v].intersects(x))
    }

    /// Every vertex of `x` is adjacent to every vertex of `y`.
    pub fn is_complete_between(&self, x: &VertexSet, y: &VertexSet) -> bool {
        x.iter().all(|v| y.is_subset(&self.adj[v]))
    }

    pub fn is_complete_to(&self, v: usize, y: &VertexSet) -> bool {
        y.is_subset(&self.adj[v])
    }

    /// `bd(X, Y)`: the vertices of `x` with a neighbour in `y`.
    pub fn boundary(&self, x: &VertexSet, y: &VertexSet) -> Result<VertexSet> {
        if let Some(v) = x.intersection(y).min() {
            return Err(Error::OverlappingSets { vertex: v });
        }
        Ok(x.iter().filter(|&v| self.adj[v].intersects(y)).collect())
    }

    /// True iff every vertex of `target` lies in `d` or has a neighbour in `d`.
    pub fn dominates(&self, d: &VertexSet, target: &VertexSet) -> bool {
        self.first_undominated(d, target).is_none()
    }

    pub fn first_undominated(&self, d: &VertexSet, target: &VertexSet) -> Option<usize> {
        target
            .iter()
            .find(|&v| !d.contains(v) && !self.adj[v].intersects(d))
    }

    pub fn is_connected_dominating(&self, d: &VertexSet) -> Result<bool> {
        if d.is_empty() {
            return Err(Error::EmptySet("connected dominating set"));
        }
        Ok(self.is_connected_within(d) && self.dominates(d, &self.vertices()))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v].intersection(within).difference(&seen).iter() {
                seen.insert(w);
                queue.push_back(w);
            }
        }
        seen
    }

    /// `g[within]` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, within: &VertexSet) -> bool {
        match within.min() {
            None => true,
            Some(s) => self.reachable_within(s, within) == *within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    /// Connected components of `g[within]`, sorted by minimum member.
    pub fn components(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(s) = left.min() {
            let comp = self.reachable_within(s, &left);
            left = left.difference(&comp);
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, x: &VertexSet) -> Induced {
        let to_parent = x.to_vec();
        let rows = to_parent
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|w| to_parent.binary_search(&w).ok())
                    .collect()
            })
            .collect();
        Induced {
            graph: Graph::from_rows(rows),
            to_parent,
        }
    }
}

/// An induced subgraph together with its id map back to the parent graph.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `to_parent[i]` is the parent id of local vertex `i`; ascending.
    pub to_parent: Vec<usize>,
}

impl Induced {
    pub fn from_parent(&self, v: usize) -> Option<usize> {
        self.to_parent.binary_search(&v).ok()
    }

    pub fn lift(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|i| self.to_parent[i]).collect()
    }

    pub fn lower(&self, parent: &VertexSet) -> VertexSet {
        parent.iter().filter_map(|v| self.from_parent(v)).collect()
    }
}

/// A path: distinct vertices, consecutive ones adjacent. Length counts edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("no vertices".into()));
        }
        let mut seen = VertexSet::new();
        for &v in &vertices {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if !seen.insert(v) {
                return Err(Error::InvalidPath(format!("vertex {v} repeats")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
        }
        Ok(Self(vertices))
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        Self(vertices)
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// No chords: the only edges among path vertices are consecutive pairs.
    pub fn is_induced(&self, g: &Graph) -> bool {
        let k = self.0.len();
        (0..k).all(|i| (i + 2..k).all(|j| !g.has_edge(self.0[i], self.0[j])))
    }

    /// The orientation with the lexicographically smaller sequence.
    pub fn canonical(mut self) -> Self {
        if self.0.last() < self.0.first() {
            self.0.reverse();
        }
        self
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("-"))
    }
}
