//! Seeded instance sources. Every generator is a pure function of its
//! arguments, and every structured generator returns the model it drew the
//! graph from, so tests never need to recognise the class.

mod rng;

pub use rng::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{parse_edge_list, Graph, VertexSet};
use crate::hgraph::{realize, HRepresentation};
use crate::recognizers::{contains_induced, is_chordal, maximal_cliques};

/// The checked-in Walther–Zamfirescu edge list.
pub const WALTHER_ZAMFIRESCU_EL: &str = include_str!("../../fixtures/walther_zamfirescu.el");

/// Twelve vertices; every vertex is avoided by some longest path, yet two
/// vertices suffice to meet them all.
pub fn fixture_walther_zamfirescu() -> Graph {
    parse_edge_list(WALTHER_ZAMFIRESCU_EL).expect("fixture parses")
}

#[derive(Clone, Debug)]
pub struct ChordalInstance {
    pub graph: Graph,
    /// Host tree and subtrees the graph was drawn from.
    pub subtrees: Vec<VertexSet>,
    pub tree: Graph,
    /// Nice representation on a clique tree of `graph`.
    pub rep: HRepresentation,
}

/// Intersection graph of `n` random subtrees of a random tree on `n` nodes
/// (at least two). Each subtree after the first is rooted at a node already
/// used, so the graph is connected; `density` scales subtree sizes, and
/// `density >= 1` makes every subtree the whole tree.
pub fn gen_chordal(seed: u64, n: usize, density: f64) -> ChordalInstance {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let k = n.max(2);
    let tree_edges: Vec<(usize, usize)> = (1..k).map(|i| (rng.below(i), i)).collect();
    let tree = Graph::from_edge_list(k, &tree_edges).expect("valid tree");
    let mut used = VertexSet::new();
    let mut subtrees = Vec::with_capacity(n);
    for _ in 0..n {
        let root = if used.is_empty() {
            rng.below(k)
        } else {
            rng.pick(&used.to_vec())
        };
        let size = if density >= 1.0 {
            k
        } else {
            let cap = ((density.max(0.0) * k as f64).ceil() as usize).max(1);
            rng.range(1, cap)
        };
        let sub = grow(&mut rng, &tree, root, size);
        used.union_with(&sub);
        subtrees.push(sub);
    }
    let graph = intersection_graph(&subtrees);
    let rep = clique_tree_representation(&graph).expect("subtree graphs are chordal");
    ChordalInstance {
        graph,
        subtrees,
        tree,
        rep,
    }
}

/// Random connected set of `size` vertices (fewer if the component is
/// smaller) grown from `root` by adding random frontier vertices.
fn grow(rng: &mut SplitMix64, g: &Graph, root: usize, size: usize) -> VertexSet {
    let mut set = VertexSet::singleton(root);
    while set.len() < size {
        let frontier = g.open_neighborhood(&set).to_vec();
        if frontier.is_empty() {
            break;
        }
        set.insert(rng.pick(&frontier));
    }
    set
}

fn intersection_graph(sets: &[VertexSet]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..sets.len() {
        for v in u + 1..sets.len() {
            if sets[u].intersects(&sets[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(sets.len(), &edges).expect("valid edges")
}

/// Representation of a connected chordal graph on a clique tree: maximal
/// cliques are host vertices, joined by a maximum-weight spanning tree of
/// the clique intersection graph, and each vertex maps to the cliques
/// containing it. A single clique is placed on both ends of `K2`.
pub fn clique_tree_representation(g: &Graph) -> Result<HRepresentation> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let peo = is_chordal(g).ok_or_else(|| Error::NotInClass {
        class: "chordal".into(),
        witness: Vec::new(),
    })?;
    let cliques = maximal_cliques(g, &peo);
    if cliques.len() == 1 {
        let phi = vec![VertexSet::from([0, 1]); g.n()];
        return HRepresentation::new(Graph::path(2), vec![1], phi);
    }
    let mut candidates = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let w = cliques[i].intersection(&cliques[j]).len();
            if w > 0 {
                candidates.push((std::cmp::Reverse(w), i, j));
            }
        }
    }
    candidates.sort();
    let mut parent: Vec<usize> = (0..cliques.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut edges = Vec::new();
    for (_, i, j) in candidates {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            edges.push((i, j));
        }
    }
    let host = Graph::from_edge_list(cliques.len(), &edges)?;
    let phi = (0..g.n())
        .map(|v| (0..cliques.len()).filter(|&c| cliques[c].contains(v)).collect())
        .collect();
    let lengths = vec![1; host.edge_count()];
    HRepresentation::new(host, lengths, phi)
}

/// Closed intervals `[l, r]` on positions `0..=len` of a subdivided `K2`.
#[derive(Clone, Debug)]
pub struct IntervalInstance {
    pub graph: Graph,
    pub intervals: Vec<(usize, usize)>,
    pub rep: HRepresentation,
}

/// `n` intervals, each containing a point of the union of the earlier ones,
/// so the graph is connected and the representation nice.
pub fn gen_interval(seed: u64, n: usize) -> IntervalInstance {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let reach = n.max(2);
    let mut raw: Vec<(i64, i64)> = Vec::with_capacity(n);
    let (mut lo, mut hi) = (0i64, 0i64);
    for i in 0..n {
        let p = if i == 0 { 0 } else { lo + rng.below((hi - lo + 1) as usize) as i64 };
        let l = p - rng.below(reach) as i64;
        let r = p + rng.below(reach) as i64;
        lo = lo.min(l);
        hi = hi.max(r);
        raw.push((l, r));
    }
    let mut intervals: Vec<(usize, usize)> =
        raw.iter().map(|&(l, r)| ((l - lo) as usize, (r - lo) as usize)).collect();
    if hi == lo {
        intervals = vec![(0, 1); n];
    }
    let rep = interval_representation(&intervals);
    let graph = interval_graph(&intervals);
    IntervalInstance {
        graph,
        intervals,
        rep,
    }
}

/// Positions `0..=len` map to `v0`, the internal ids in order, then `v1`.
pub fn interval_representation(intervals: &[(usize, usize)]) -> HRepresentation {
    let len = intervals.iter().map(|&(_, r)| r).max().unwrap_or(0).max(1);
    let id = |p: usize| match p {
        0 => 0,
        p if p == len => 1,
        p => p + 1,
    };
    let phi = intervals.iter().map(|&(l, r)| (l..=r).map(id).collect()).collect();
    HRepresentation::new(Graph::path(2), vec![len], phi).expect("valid interval model")
}

pub fn interval_graph(intervals: &[(usize, usize)]) -> Graph {
    let mut edges = Vec::new();
    for (u, &(a, b)) in intervals.iter().enumerate() {
        for (v, &(c, d)) in intervals.iter().enumerate().skip(u + 1) {
            if a <= d && c <= b {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(intervals.len(), &edges).expect("valid edges")
}

/// Arcs on a circle of `3m` positions; arc `(s, span)` covers positions
/// `s, s+1, …, s+span` modulo `3m`, and `span >= 3m - 1` is the whole circle.
#[derive(Clone, Debug)]
pub struct CircularArcInstance {
    pub graph: Graph,
    pub positions: usize,
    pub arcs: Vec<(usize, usize)>,
    pub rep: HRepresentation,
}

/// Arcs start at `n` distinct random positions; each runs at least to the
/// next start, so consecutive arcs meet and the circle is covered.
pub fn gen_circular_arc(seed: u64, n: usize) -> CircularArcInstance {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let m = n.max(2);
    let c = 3 * m;
    let mut starts: Vec<usize> = (0..c).collect();
    for i in 0..n {
        let j = rng.range(i, c - 1);
        starts.swap(i, j);
    }
    starts.truncate(n);
    starts.sort_unstable();
    let mut arcs = Vec::with_capacity(n);
    for i in 0..n {
        let next = starts[(i + 1) % n];
        let gap = (next + c - starts[i]) % c;
        let gap = if gap == 0 { c } else { gap };
        let span = (gap + rng.below(m + 1)).min(c - 1);
        arcs.push((starts[i], span));
    }
    // Present the arcs in random order so vertex ids carry no geometry.
    for i in (1..n).rev() {
        arcs.swap(i, rng.below(i + 1));
    }
    let sets: Vec<VertexSet> = arcs.iter().map(|&(s, span)| arc_positions(c, s, span)).collect();
    let graph = intersection_graph(&sets);
    let rep = arc_representation(m, &sets);
    CircularArcInstance {
        graph,
        positions: c,
        arcs,
        rep,
    }
}

fn arc_positions(c: usize, s: usize, span: usize) -> VertexSet {
    (0..=span.min(c - 1)).map(|k| (s + k) % c).collect()
}

/// Circle positions on `K3` edges of length `m`: `0, m, 2m` are the host
/// vertices; edge `0-1` covers positions `0..m`, `1-2` covers `m..2m`, and
/// `0-2` is read from `0` backwards through `3m-1, …, 2m`.
fn arc_representation(m: usize, sets: &[VertexSet]) -> HRepresentation {
    let c = 3 * m;
    let inner = m - 1;
    let id = |p: usize| -> usize {
        match p {
            0 => 0,
            p if p == m => 1,
            p if p == 2 * m => 2,
            p if p < m => 3 + (p - 1),
            p if p < 2 * m => 3 + 2 * inner + (p - m - 1),
            p => 3 + inner + (c - p - 1),
        }
    };
    let phi = sets.iter().map(|s| s.iter().map(id).collect()).collect();
    HRepresentation::new(Graph::cycle(3), vec![m; 3], phi).expect("valid arc model")
}

#[derive(Clone, Debug)]
pub struct HInstance {
    pub graph: Graph,
    pub rep: HRepresentation,
}

/// `n` random connected segments on `host` with every edge subdivided into
/// `1..=max_length` edges. Segments are then extended along uncovered
/// vertices and edges until the representation is nice, which also makes
/// the graph connected.
pub fn gen_hgraph(seed: u64, host: &Graph, n: usize, max_length: usize) -> HInstance {
    assert!(n >= 1 && max_length >= 1);
    let mut rng = SplitMix64::new(seed);
    let lengths: Vec<usize> = (0..host.edge_count()).map(|_| rng.range(1, max_length)).collect();
    let skeleton = HRepresentation::new(host.clone(), lengths.clone(), Vec::new())
        .expect("host is connected with at least two vertices");
    let sub = skeleton.h_phi().clone();
    let cap = (sub.n() / 2).max(1);
    let mut phi: Vec<VertexSet> = (0..n)
        .map(|_| {
            let root = rng.below(sub.n());
            let size = rng.range(1, cap);
            grow(&mut rng, &sub, root, size)
        })
        .collect();
    loop {
        let covered: Vec<Vec<usize>> = (0..sub.n())
            .map(|x| (0..n).filter(|&v| phi[v].contains(x)).collect())
            .collect();
        let gap = sub.edges().find(|&(x, y)| {
            let (cx, cy) = (&covered[x], &covered[y]);
            !cx.iter().any(|v| cy.contains(v)) && !(cx.is_empty() && cy.is_empty())
        });
        match gap {
            Some((x, y)) => {
                let (from, to) = if covered[x].is_empty() { (y, x) } else { (x, y) };
                let owner = rng.pick(&covered[from]);
                phi[owner].insert(to);
            }
            None => break,
        }
    }
    let rep = HRepresentation::new(host.clone(), lengths, phi).expect("segments inside the subdivision");
    let graph = realize(&rep).expect("segments are connected");
    HInstance { graph, rep }
}

/// Clique blow-up: vertex `i` of `base` becomes a clique of
/// `1..=max_clique` vertices; cliques of adjacent vertices are complete to
/// each other.
pub fn gen_blowup(seed: u64, base: &Graph, max_clique: usize) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let sizes: Vec<usize> = (0..base.n()).map(|_| rng.range(1, max_clique)).collect();
    let mut start = vec![0];
    for s in &sizes {
        start.push(start.last().unwrap() + s);
    }
    let block = |i: usize| start[i]..start[i + 1];
    let mut edges = Vec::new();
    for i in 0..base.n() {
        for u in block(i) {
            for v in u + 1..start[i + 1] {
                edges.push((u, v));
            }
        }
    }
    for (i, j) in base.edges() {
        for u in block(i) {
            for v in block(j) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(start[base.n()], &edges).expect("valid blow-up")
}

/// Connected `G(n, p)`.
pub fn gen_connected(rng: &mut SplitMix64, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.chance(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

#[derive(Clone, Debug)]
pub struct Filtered {
    pub graph: Graph,
    /// Samples drawn, including the accepted one.
    pub attempts: usize,
}

/// Connected `G(n, p)` samples with no induced copy of any `forbidden`
/// pattern. Each attempt draws one connected sample (disconnected draws are
/// redrawn and do not count).
pub fn gen_class_filtered(
    seed: u64,
    n: usize,
    p: f64,
    forbidden: &[Graph],
    budget: usize,
) -> Result<Filtered> {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    for attempts in 1..=budget {
        let graph = gen_connected(&mut rng, n, p);
        if forbidden.iter().all(|f| contains_induced(&graph, f).is_none()) {
            return Ok(Filtered { graph, attempts });
        }
    }
    Err(Error::BudgetExhausted { attempts: budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognizers::{is_free_of, patterns};

    #[test]
    fn chordal_generator() {
        let inst = gen_chordal(1, 8, 0.4);
        assert_eq!(inst.graph.n(), 8);
        assert!(inst.graph.is_connected());
        assert!(is_chordal(&inst.graph).is_some());
        assert!(inst.rep.is_nice());
        assert_eq!(realize(&inst.rep).unwrap(), inst.graph);
        assert_eq!(intersection_graph(&inst.subtrees), inst.graph);

        assert_eq!(gen_chordal(3, 1, 0.5).graph, Graph::complete(1));
        assert_eq!(gen_chordal(3, 6, 1.0).graph, Graph::complete(6));
    }

    #[test]
    fn interval_generator() {
        for seed in 1..=3 {
            let inst = gen_interval(seed, 9);
            assert_eq!(realize(&inst.rep).unwrap(), inst.graph);
            assert!(inst.graph.is_connected());
            assert!(inst.rep.is_nice());
            assert!(is_chordal(&inst.graph).is_some());
        }
        assert_eq!(gen_interval(5, 1).graph, Graph::complete(1));
        let nested = [(0, 6), (1, 5), (2, 4), (3, 3)];
        assert_eq!(interval_graph(&nested), Graph::complete(4));
        assert_eq!(realize(&interval_representation(&nested)).unwrap(), Graph::complete(4));
    }

    #[test]
    fn circular_arc_generator() {
        for seed in 1..=3 {
            let inst = gen_circular_arc(seed, 8);
            let sets: Vec<VertexSet> = inst
                .arcs
                .iter()
                .map(|&(s, span)| arc_positions(inst.positions, s, span))
                .collect();
            assert_eq!(intersection_graph(&sets), inst.graph);
            assert_eq!(realize(&inst.rep).unwrap(), inst.graph);
            assert!(inst.rep.is_nice(), "{:?}", inst.rep.nice_violation());
            assert!(inst.graph.is_connected());
        }
        assert_eq!(gen_circular_arc(2, 1).graph, Graph::complete(1));
    }

    #[test]
    fn hgraph_generator() {
        let paw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        for (seed, host) in [(1, Graph::complete(4)), (2, paw), (3, Graph::path(2))] {
            let inst = gen_hgraph(seed, &host, 10, 3);
            assert!(inst.rep.is_nice());
            assert!(inst.graph.is_connected());
        }
    }

    #[test]
    fn blowups_of_paths_avoid_bull_and_chair() {
        let g = gen_blowup(4, &Graph::path(8), 3);
        assert!(is_free_of(&g, &[patterns::bull(), patterns::chair()]));
        assert!(contains_induced(&g, &patterns::path(8)).is_some());
    }

    #[test]
    fn filtered_generator() {
        let f = gen_class_filtered(1, 10, 0.5, &[patterns::path(5)], 10_000).unwrap();
        assert!(f.graph.is_connected());
        assert!(contains_induced(&f.graph, &patterns::path(5)).is_none());
        let k = gen_class_filtered(1, 6, 1.0, &[], 1).unwrap();
        assert_eq!(k.graph, Graph::complete(6));
        assert!(matches!(
            gen_class_filtered(1, 8, 0.3, &[Graph::path(2)], 5),
            Err(Error::BudgetExhausted { attempts: 5 })
        ));
    }

    #[test]
    fn seeded_determinism() {
        assert_eq!(gen_chordal(9, 10, 0.3).graph, gen_chordal(9, 10, 0.3).graph);
        assert_eq!(gen_interval(9, 10).intervals, gen_interval(9, 10).intervals);
        assert_eq!(gen_circular_arc(9, 10).arcs, gen_circular_arc(9, 10).arcs);
    }
}
