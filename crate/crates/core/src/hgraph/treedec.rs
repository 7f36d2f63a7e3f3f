use std::collections::HashMap;

use super::HRepresentation;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph given to the exact solver.
pub const EXACT_LIMIT: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree: Graph,
    pub bags: Vec<VertexSet>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Nodes whose bag meets `x`.
    pub fn nodes_meeting(&self, x: &VertexSet) -> VertexSet {
        (0..self.bags.len()).filter(|&t| self.bags[t].intersects(x)).collect()
    }

    /// Checks the three decomposition conditions against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::TreeDecomposition(m));
        let nodes = self.tree.n();
        if nodes == 0 || nodes != self.bags.len() {
            return bad(format!("{} tree nodes for {} bags", nodes, self.bags.len()));
        }
        if self.tree.edge_count() + 1 != nodes || !self.tree.is_connected() {
            return bad("decomposition tree is not a tree".into());
        }
        for (t, bag) in self.bags.iter().enumerate() {
            if bag.max().is_some_and(|v| v >= g.n()) {
                return bad(format!("bag {t} mentions a vertex outside the graph"));
            }
        }
        for v in 0..g.n() {
            let support = self.nodes_meeting(&VertexSet::singleton(v));
            if support.is_empty() {
                return bad(format!("vertex {v} is in no bag"));
            }
            if !self.tree.is_connected_within(&support) {
                return bad(format!("bags containing {v} are not connected"));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return bad(format!("edge {u}-{v} is in no bag"));
            }
        }
        Ok(())
    }

    /// PACE `.td` text, 1-based.
    pub fn to_pace(&self, vertices: usize) -> String {
        let mut out = format!("s td {} {} {}\n", self.bags.len(), self.width() + 1, vertices);
        for (t, bag) in self.bags.iter().enumerate() {
            out.push_str(&format!("b {}", t + 1));
            for v in bag.iter() {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        for (a, b) in self.tree.edges() {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }

    pub fn from_pace(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut bags: Vec<Option<VertexSet>> = Vec::new();
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| Error::Parse { line, message };
            let toks: Vec<&str> = raw.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("expected an integer, found {s:?}")));
            match toks.first() {
                None | Some(&"c") => continue,
                Some(&"s") => {
                    if toks.len() != 5 || toks[1] != "td" {
                        return Err(err("header must be `s td <bags> <width+1> <vertices>`".into()));
                    }
                    let count = num(toks[2])?;
                    header = Some((count, num(toks[4])?));
                    bags = vec![None; count];
                }
                Some(&"b") => {
                    let (count, n) = header.ok_or_else(|| err("bag before header".into()))?;
                    let id = num(toks.get(1).ok_or_else(|| err("missing bag id".into()))?)?;
                    if id == 0 || id > count {
                        return Err(err(format!("bag id {id} out of range")));
                    }
                    let mut bag = VertexSet::new();
                    for t in &toks[2..] {
                        let v = num(t)?;
                        if v == 0 || v > n {
                            return Err(err(format!("vertex {v} out of range")));
                        }
                        bag.insert(v - 1);
                    }
                    bags[id - 1] = Some(bag);
                }
                Some(_) => {
                    let (count, _) = header.ok_or_else(|| err("edge before header".into()))?;
                    if toks.len() != 2 {
                        return Err(err("tree edge must be `a b`".into()));
                    }
                    let (a, b) = (num(toks[0])?, num(toks[1])?);
                    if a == 0 || b == 0 || a > count || b > count {
                        return Err(err(format!("tree edge {a} {b} out of range")));
                    }
                    edges.push((a - 1, b - 1));
                }
            }
        }
        let (count, _) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(t, b)| {
                b.ok_or_else(|| Error::TreeDecomposition(format!("bag {} is not listed", t + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let tree = Graph::from_edge_list(count, &edges)?;
        Ok(Self { tree, bags })
    }
}

/// Exact treewidth and an elimination order achieving it.
///
/// Memoised search over the set of remaining vertices (the graph left after
/// eliminating a set does not depend on the order). Simplicial vertices,
/// and almost-simplicial ones of degree at most a lower bound, are
/// eliminated without branching; a branch stops once it meets the
/// minor-min-degree lower bound.
pub fn exact_treewidth(g: &Graph) -> (usize, Vec<usize>) {
    assert!(g.n() <= 64, "exact treewidth works on at most 64 vertices");
    let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).to_mask()).collect();
    let alive = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut solver = Solver { memo: HashMap::new() };
    let width = solver.solve(&adj, alive);
    let mut order = Vec::with_capacity(g.n());
    solver.trace(adj, alive, &mut order);
    (width, order)
}

struct Solver {
    memo: HashMap<u64, (usize, usize)>,
}

impl Solver {
    /// Width of the best elimination of `alive`, memoised with the vertex
    /// eliminated first.
    fn solve(&mut self, adj: &[u64], alive: u64) -> usize {
        if alive.count_ones() <= 1 {
            return 0;
        }
        if let Some(&(w, _)) = self.memo.get(&alive) {
            return w;
        }
        let lower = minor_min_degree(adj, alive);
        let (width, first) = if let Some(v) = safe_vertex(adj, alive, lower) {
            let d = (adj[v as usize] & alive).count_ones() as usize;
            let next = eliminate(adj, alive, v);
            (d.max(self.solve(&next, alive & !(1 << v))), v)
        } else {
            let mut best = (usize::MAX, 0);
            let mut candidates: Vec<u32> = bits(alive).collect();
            candidates.sort_by_key(|&v| (adj[v as usize] & alive).count_ones());
            for v in candidates {
                let d = (adj[v as usize] & alive).count_ones() as usize;
                if d >= best.0 {
                    continue;
                }
                let next = eliminate(adj, alive, v);
                let w = d.max(self.solve(&next, alive & !(1 << v)));
                if w < best.0 {
                    best = (w, v);
                }
                if best.0 <= lower {
                    break;
                }
            }
            best
        };
        self.memo.insert(alive, (width, first as usize));
        width
    }

    fn trace(&mut self, mut adj: Vec<u64>, mut alive: u64, order: &mut Vec<usize>) {
        while alive != 0 {
            let v = if alive.count_ones() == 1 {
                alive.trailing_zeros() as usize
            } else {
                self.memo[&alive].1
            };
            order.push(v);
            adj = eliminate(&adj, alive, v as u32);
            alive &= !(1 << v);
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros();
            m &= m - 1;
            v
        })
    })
}

fn is_clique(adj: &[u64], set: u64) -> bool {
    bits(set).all(|u| set & !(1 << u) & !adj[u as usize] == 0)
}

/// A vertex whose elimination first is optimal.
fn safe_vertex(adj: &[u64], alive: u64, lower: usize) -> Option<u32> {
    let mut almost = None;
    for v in bits(alive) {
        let nb = adj[v as usize] & alive;
        if is_clique(adj, nb) {
            return Some(v);
        }
        if almost.is_none()
            && nb.count_ones() as usize <= lower
            && bits(nb).any(|u| is_clique(adj, nb & !(1 << u)))
        {
            almost = Some(v);
        }
    }
    almost
}

/// Neighbours of `v` become a clique; `v` is dropped from every row.
fn eliminate(adj: &[u64], alive: u64, v: u32) -> Vec<u64> {
    let nb = adj[v as usize] & alive;
    let mut out = adj.to_vec();
    for u in bits(nb) {
        out[u as usize] = (out[u as usize] | nb) & !(1 << u) & !(1 << v);
    }
    out[v as usize] = 0;
    out
}

/// Contract a minimum-degree vertex into its lowest-degree neighbour,
/// recording the largest minimum degree seen.
fn minor_min_degree(adj: &[u64], alive: u64) -> usize {
    let mut adj: Vec<u64> = adj.iter().map(|r| r & alive).collect();
    let mut alive = alive;
    let mut best = 0;
    while alive.count_ones() > 1 {
        let deg = |a: &Vec<u64>, v: u32| a[v as usize].count_ones();
        let v = bits(alive).min_by_key(|&v| deg(&adj, v)).unwrap();
        best = best.max(deg(&adj, v) as usize);
        let nb = adj[v as usize];
        match bits(nb).min_by_key(|&u| deg(&adj, u)) {
            None => {}
            Some(u) => {
                adj[u as usize] |= nb & !(1 << u);
                for w in bits(nb & !(1 << u)) {
                    adj[w as usize] |= 1 << u;
                }
            }
        }
        for w in bits(nb) {
            adj[w as usize] &= !(1 << v);
        }
        adj[v as usize] = 0;
        alive &= !(1 << v);
    }
    best
}

/// Decomposition with one bag per vertex: `v` plus its later neighbours in
/// the fill graph, hung below the earliest of them.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    assert_eq!(order.len(), n);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: VertexSet = adj[v].iter().filter(|&u| pos[u] > i).collect();
        for u in later.iter() {
            let mut add = later.clone();
            add.remove(u);
            adj[u].union_with(&add);
        }
        let parent = later.iter().min_by_key(|&u| pos[u]).or_else(|| order.get(i + 1).copied());
        if let Some(p) = parent {
            edges.push((i, pos[p]));
        }
        let mut bag = later;
        bag.insert(v);
        bags.push(bag);
    }
    TreeDecomposition {
        tree: Graph::from_edge_list(n, &edges).expect("valid tree"),
        bags,
    }
}

/// Minimum-width decomposition of a graph on at most [`EXACT_LIMIT`]
/// vertices.
pub fn exact_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    if g.n() == 0 {
        return Err(Error::EmptySet("graph"));
    }
    if g.n() > EXACT_LIMIT {
        return Err(Error::SizeLimit {
            what: "exact treewidth",
            n: g.n(),
            limit: EXACT_LIMIT,
        });
    }
    let (_, order) = exact_treewidth(g);
    Ok(decomposition_from_order(g, &order))
}

/// Decomposition of the subdivision: exact when it is small enough,
/// otherwise an exact decomposition of the host extended by a chain of bags
/// of size at most 3 along every subdivided edge.
pub fn decompose(rep: &HRepresentation) -> TreeDecomposition {
    if rep.h_phi().n() <= EXACT_LIMIT {
        return exact_decomposition(rep.h_phi()).expect("size checked");
    }
    let (_, order) = exact_treewidth(rep.host());
    let base = decomposition_from_order(rep.host(), &order);
    let mut bags = base.bags.clone();
    let mut edges: Vec<(usize, usize)> = base.tree.edges().collect();
    for path in rep.edge_paths() {
        let (a, b) = (path[0], path[path.len() - 1]);
        let mut parent = base
            .bags
            .iter()
            .position(|bag| bag.contains(a) && bag.contains(b))
            .expect("every host edge lies in a bag");
        for w in path[..path.len() - 1].windows(2) {
            bags.push(VertexSet::from([w[0], w[1], b]));
            edges.push((parent, bags.len() - 1));
            parent = bags.len() - 1;
        }
    }
    TreeDecomposition {
        tree: Graph::from_edge_list(bags.len(), &edges).expect("valid tree"),
        bags,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subdivided(host: Graph, len: usize) -> HRepresentation {
        let m = host.edge_count();
        HRepresentation::new(host, vec![len; m], vec![]).unwrap()
    }

    #[test]
    fn small_widths() {
        assert_eq!(exact_treewidth(&Graph::path(2)).0, 1);
        assert_eq!(exact_treewidth(&Graph::empty(3)).0, 0);
        assert_eq!(exact_treewidth(&Graph::cycle(6)).0, 2);
        assert_eq!(exact_treewidth(&Graph::complete(5)).0, 4);
        // 3x3 grid
        let mut e = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = 3 * r + c;
                if c < 2 {
                    e.push((v, v + 1));
                }
                if r < 2 {
                    e.push((v, v + 3));
                }
            }
        }
        assert_eq!(exact_treewidth(&Graph::from_edge_list(9, &e).unwrap()).0, 3);
    }

    #[test]
    fn subdivisions_keep_width() {
        for (host, want) in [(Graph::path(2), 1), (Graph::cycle(3), 2), (Graph::complete(4), 3)] {
            let rep = subdivided(host, 2);
            let td = decompose(&rep);
            td.validate(rep.h_phi()).unwrap();
            assert_eq!(td.width(), want);
        }
    }

    #[test]
    fn large_subdivision_uses_chain() {
        let rep = subdivided(Graph::complete(4), 6);
        assert!(rep.h_phi().n() > EXACT_LIMIT);
        let td = decompose(&rep);
        td.validate(rep.h_phi()).unwrap();
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn pace_round_trip() {
        let g = Graph::cycle(5);
        let td = exact_decomposition(&g).unwrap();
        let text = td.to_pace(5);
        assert!(text.starts_with("s td 5 3 5\n"));
        let back = TreeDecomposition::from_pace(&format!("c comment\n{text}")).unwrap();
        assert_eq!(back, td);
        back.validate(&g).unwrap();
    }

    #[test]
    fn invalid_decompositions() {
        let g = Graph::cycle(4);
        let td = TreeDecomposition {
            tree: Graph::path(2),
            bags: vec![VertexSet::from([0, 1, 2]), VertexSet::from([2, 3])],
        };
        assert!(td.validate(&g).is_err());
        let err = TreeDecomposition::from_pace("s td 1 2 2\nb 1 1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
