//! Exact ground truth for desk-scale graphs.
//!
//! Everything here rests on one table: for every vertex subset `T` (as a
//! bitmask) the set of vertices `v` such that some path visits exactly `T`
//! and ends at `v`. From it we read the longest path length, the vertex sets
//! of all longest paths, and transversal checks (`S` hits every longest path
//! iff `G - S` has no path of the same length). Enumeration of the paths
//! themselves uses a second table, the longest path starting at `v` inside
//! a subset, as an exact pruning bound.
//!
//! Limits are hard: exceeding one is an error, never an approximation.

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph for the subset DP.
    pub dp: usize,
    /// Largest graph for explicit path enumeration.
    pub enumeration: usize,
    /// Most longest paths an enumeration may return.
    pub path_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            dp: 20,
            enumeration: 16,
            path_cap: 1_000_000,
        }
    }
}

/// All longest paths of a graph, each stored once in the orientation whose
/// vertex sequence is lexicographically smaller. Sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongestPathReport {
    pub length: usize,
    pub paths: Vec<Path>,
}

/// How a transversal was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Refine,
    /// A connected dominating set taken as a transversal.
    Cds,
    PtFree,
    BullChair(BullChairBranch),
    Chordal,
    ChordalClique,
    HGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BullChairBranch {
    /// No induced `P6`: delegated to the `P6`-free construction.
    P6Free,
    /// Maximal induced path on exactly six vertices.
    MaximalP6,
    /// Maximal induced path on seven or more vertices.
    LongPath,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Exact => "exact",
            Method::Refine => "refine",
            Method::Cds => "cds",
            Method::PtFree => "pt_free",
            Method::BullChair(BullChairBranch::P6Free) => "bull_chair/a",
            Method::BullChair(BullChairBranch::MaximalP6) => "bull_chair/b1",
            Method::BullChair(BullChairBranch::LongPath) => "bull_chair/b2",
            Method::Chordal => "chordal",
            Method::ChordalClique => "chordal_clique",
            Method::HGraph => "hgraph",
        };
        f.write_str(s)
    }
}

/// A vertex set claimed to meet every longest path, with its provenance.
///
/// `verified` is set only after the oracle has checked the claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalCertificate {
    pub transversal: VertexSet,
    pub bound_claimed: Option<usize>,
    pub method: Method,
    pub verified: bool,
}

impl TransversalCertificate {
    pub fn size(&self) -> usize {
        self.transversal.len()
    }

    pub fn within_bound(&self) -> bool {
        self.bound_claimed.is_none_or(|b| self.size() <= b)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    pub limits: Limits,
}

impl Oracle {
    pub fn new(limits: Limits) -> Self {
        Self { limits }
    }

    pub fn feasible(&self, g: &Graph) -> bool {
        g.n() <= self.limits.dp
    }

    fn check_dp(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.limits.dp || n > 30 {
            return Err(Error::SizeLimit {
                what,
                n,
                limit: self.limits.dp.min(30),
            });
        }
        Ok(())
    }

    /// Runs the subset DP once; the result answers transversal queries.
    pub fn analyze(&self, g: &Graph) -> Result<LongestPathFamily> {
        if g.n() == 0 {
            return Err(Error::EmptySet("graph"));
        }
        self.check_dp("longest path DP", g.n())?;
        let adj = adjacency_masks(g);
        let full = full_mask(g.n());
        let reach = reach_table(&adj, full);
        let length = max_length(&reach).expect("nonempty graph has a path");
        let vertex_sets: Vec<u32> = (0..reach.len())
            .filter(|&m| reach[m] != 0 && (m as u32).count_ones() as usize == length + 1)
            .map(|m| m as u32)
            .collect();
        Ok(LongestPathFamily {
            oracle: *self,
            adj,
            length,
            vertex_sets,
        })
    }

    pub fn longest_path_length(&self, g: &Graph) -> Result<usize> {
        Ok(self.analyze(g)?.length)
    }

    pub fn is_transversal(&self, g: &Graph, s: &VertexSet) -> Result<bool> {
        g.check_subset(s)?;
        self.analyze(g)?.is_transversal(s)
    }

    /// Minimum transversal size and a witness. Iterative deepening over the
    /// size, branching on the vertices of the first unhit longest-path
    /// vertex set, most frequent vertices first.
    pub fn exact_lpt(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        let family = self.analyze(g)?;
        let sets = &family.vertex_sets;
        let mut counts = vec![0usize; g.n()];
        for &m in sets {
            for v in bits(m) {
                counts[v] += 1;
            }
        }
        for k in 1..=g.n() {
            if let Some(hit) = hitting_set(sets, &counts, k, 0) {
                return Ok((k, VertexSet::from_mask(hit as u64)));
            }
        }
        unreachable!("V(G) hits every longest path")
    }

    /// Longest path of `g[region]` with at least one endpoint in `anchors`;
    /// `None` when `anchors` is empty.
    pub fn longest_anchored_path_length(
        &self,
        g: &Graph,
        region: &VertexSet,
        anchors: &VertexSet,
    ) -> Result<Option<usize>> {
        g.check_subset(region)?;
        if region.is_empty() {
            return Err(Error::EmptySet("region"));
        }
        if let Some(v) = anchors.first_outside(region) {
            return Err(Error::AnchorsOutsideRegion { vertex: v });
        }
        if anchors.is_empty() {
            return Ok(None);
        }
        self.check_dp("anchored path DP", region.len())?;
        let sub = g.induced(region);
        let adj = adjacency_masks(&sub.graph);
        let reach = reach_table(&adj, full_mask(sub.graph.n()));
        let local = sub.lower(anchors).to_mask() as u32;
        Ok((1..reach.len())
            .filter(|&m| reach[m] & local != 0)
            .map(|m| m.count_ones() as usize - 1)
            .max())
    }

    /// All longest paths, canonicalised and sorted.
    pub fn enumerate_longest_paths(&self, g: &Graph) -> Result<LongestPathReport> {
        if g.n() > self.limits.enumeration {
            return Err(Error::SizeLimit {
                what: "longest path enumeration",
                n: g.n(),
                limit: self.limits.enumeration,
            });
        }
        let length = self.longest_path_length(g)?;
        let adj = adjacency_masks(g);
        let n = g.n();
        let full = full_mask(n);
        let ext = extension_table(&adj);
        let mut walk = Enumeration {
            adj: &adj,
            ext: &ext,
            n,
            full,
            length,
            cap: self.limits.path_cap,
            stack: Vec::with_capacity(n),
            out: Vec::new(),
        };
        for v in 0..n {
            if ext[(full as usize) * n + v] as usize >= length {
                walk.stack.push(v);
                walk.dfs(1 << v)?;
                walk.stack.pop();
            }
        }
        let mut paths = walk.out;
        paths.sort();
        Ok(LongestPathReport { length, paths })
    }
}

/// The subset-DP summary of one graph.
#[derive(Clone, Debug)]
pub struct LongestPathFamily {
    oracle: Oracle,
    adj: Vec<u32>,
    pub length: usize,
    /// Vertex sets (bitmasks) of the longest paths, ascending, deduplicated.
    vertex_sets: Vec<u32>,
}

impl LongestPathFamily {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        self.vertex_sets
            .iter()
            .map(|&m| VertexSet::from_mask(m as u64))
            .collect()
    }

    pub fn vertex_set_masks(&self) -> &[u32] {
        &self.vertex_sets
    }

    /// Vertices lying on at least one longest path.
    pub fn covered(&self) -> VertexSet {
        VertexSet::from_mask(self.vertex_sets.iter().fold(0u32, |a, &m| a | m) as u64)
    }

    fn avoiding_table(&self, s: &VertexSet) -> Result<(Vec<u32>, Vec<usize>)> {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !s.contains(v)).collect();
        self.oracle.check_dp("longest path DP", keep.len())?;
        let adj: Vec<u32> = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[v] & (1 << w) != 0)
                    .fold(0u32, |a, (i, _)| a | 1 << i)
            })
            .collect();
        Ok((reach_table(&adj, full_mask(keep.len())), keep))
    }

    pub fn is_transversal(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.path_avoiding(s)?.is_none())
    }

    /// A longest path of the whole graph that misses `s`, if any.
    pub fn path_avoiding(&self, s: &VertexSet) -> Result<Option<Path>> {
        if let Some(v) = s.max() {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        let (reach, keep) = self.avoiding_table(s)?;
        let target = self.length + 1;
        let Some(mut mask) =
            (1..reach.len()).find(|&m| reach[m] != 0 && m.count_ones() as usize == target)
        else {
            return Ok(None);
        };
        let adj: Vec<u32> = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[v] & (1 << w) != 0)
                    .fold(0u32, |a, (i, _)| a | 1 << i)
            })
            .collect();
        let mut v = reach[mask].trailing_zeros() as usize;
        let mut seq = vec![keep[v]];
        while mask.count_ones() > 1 {
            mask &= !(1 << v);
            let prev = reach[mask] & adj[v];
            v = prev.trailing_zeros() as usize;
            seq.push(keep[v]);
        }
        Ok(Some(Path::new_unchecked(seq).canonical()))
    }
}

struct Enumeration<'a> {
    adj: &'a [u32],
    ext: &'a [u8],
    n: usize,
    full: u32,
    length: usize,
    cap: usize,
    stack: Vec<usize>,
    out: Vec<Path>,
}

impl Enumeration<'_> {
    fn dfs(&mut self, visited: u32) -> Result<()> {
        let depth = self.stack.len() - 1;
        let v = *self.stack.last().unwrap();
        if depth == self.length {
            if self.length == 0 || self.stack[0] < v {
                if self.out.len() == self.cap {
                    return Err(Error::PathCapExceeded { cap: self.cap });
                }
                self.out.push(Path::new_unchecked(self.stack.clone()));
            }
            return Ok(());
        }
        let avail = self.full & !visited;
        let need = self.length - depth - 1;
        for w in bits(self.adj[v] & avail) {
            if self.ext[(avail as usize) * self.n + w] as usize >= need {
                self.stack.push(w);
                self.dfs(visited | 1 << w)?;
                self.stack.pop();
            }
        }
        Ok(())
    }
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).to_mask() as u32).collect()
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

/// `reach[T]`: endpoints of paths visiting exactly `T`.
fn reach_table(adj: &[u32], full: u32) -> Vec<u32> {
    let n = adj.len();
    let mut reach = vec![0u32; 1usize << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for mask in 1..=full as usize {
        let ends = reach[mask];
        for v in bits(ends) {
            for w in bits(adj[v] & !(mask as u32)) {
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    reach
}

fn max_length(reach: &[u32]) -> Option<usize> {
    (1..reach.len())
        .filter(|&m| reach[m] != 0)
        .map(|m| m.count_ones() as usize - 1)
        .max()
}

/// `ext[T * n + v]`: edges of a longest path starting at `v` inside `T`.
fn extension_table(adj: &[u32]) -> Vec<u8> {
    let n = adj.len();
    let mut ext = vec![0u8; (1usize << n) * n];
    for mask in 1usize..(1 << n) {
        for v in bits(mask as u32) {
            let rest = mask & !(1 << v);
            let best = bits(adj[v] & rest as u32)
                .map(|w| ext[rest * n + w] + 1)
                .max()
                .unwrap_or(0);
            ext[mask * n + v] = best;
        }
    }
    ext
}

fn hitting_set(sets: &[u32], counts: &[usize], budget: usize, chosen: u32) -> Option<u32> {
    let Some(&open) = sets.iter().find(|&&m| m & chosen == 0) else {
        return Some(chosen);
    };
    if budget == 0 {
        return None;
    }
    let mut candidates: Vec<usize> = bits(open).collect();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(counts[v]), v));
    candidates
        .into_iter()
        .find_map(|v| hitting_set(sets, counts, budget - 1, chosen | 1 << v))
}

pub fn longest_path_length(g: &Graph) -> Result<usize> {
    Oracle::default().longest_path_length(g)
}

pub fn enumerate_longest_paths(g: &Graph) -> Result<LongestPathReport> {
    Oracle::default().enumerate_longest_paths(g)
}

pub fn is_transversal(g: &Graph, s: &VertexSet) -> Result<bool> {
    Oracle::default().is_transversal(g, s)
}

pub fn exact_lpt(g: &Graph) -> Result<(usize, VertexSet)> {
    Oracle::default().exact_lpt(g)
}

pub fn longest_anchored_path_length(
    g: &Graph,
    region: &VertexSet,
    anchors: &VertexSet,
) -> Result<Option<usize>> {
    Oracle::default().longest_anchored_path_length(g, region, anchors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixture_walther_zamfirescu;

    fn set(xs: &[usize]) -> VertexSet {
        xs.into()
    }

    #[test]
    fn lengths() {
        assert_eq!(longest_path_length(&Graph::path(4)).unwrap(), 3);
        assert_eq!(longest_path_length(&Graph::cycle(5)).unwrap(), 4);
        assert_eq!(longest_path_length(&Graph::empty(1)).unwrap(), 0);
        assert!(longest_path_length(&Graph::empty(0)).is_err());
    }

    #[test]
    fn walther_zamfirescu_regression() {
        // frozen from the DP: the graph is not traceable, longest paths have 10 vertices
        let g = fixture_walther_zamfirescu();
        assert_eq!(longest_path_length(&g).unwrap(), 9);
        let fam = Oracle::default().analyze(&g).unwrap();
        assert_eq!(fam.vertex_sets().len(), 18);
    }

    #[test]
    fn enumeration_examples() {
        let p4 = enumerate_longest_paths(&Graph::path(4)).unwrap();
        assert_eq!(p4.paths.len(), 1);
        assert_eq!(p4.paths[0].vertices(), &[0, 1, 2, 3]);
        // counts frozen from an exhaustive permutation check (see tests/oracle_cross.rs)
        assert_eq!(enumerate_longest_paths(&Graph::complete(3)).unwrap().paths.len(), 3);
        assert_eq!(enumerate_longest_paths(&Graph::cycle(5)).unwrap().paths.len(), 5);
        let k1 = enumerate_longest_paths(&Graph::empty(1)).unwrap();
        assert_eq!((k1.length, k1.paths.len()), (0, 1));
    }

    #[test]
    fn enumeration_limits_are_loud() {
        let oracle = Oracle::new(Limits {
            path_cap: 10,
            ..Limits::default()
        });
        assert!(matches!(
            oracle.enumerate_longest_paths(&Graph::complete(6)),
            Err(Error::PathCapExceeded { cap: 10 })
        ));
        assert!(matches!(
            enumerate_longest_paths(&Graph::path(17)),
            Err(Error::SizeLimit { limit: 16, .. })
        ));
        assert!(matches!(
            longest_path_length(&Graph::path(21)),
            Err(Error::SizeLimit { limit: 20, .. })
        ));
    }

    #[test]
    fn transversal_examples() {
        assert!(is_transversal(&Graph::path(4), &set(&[1])).unwrap());
        assert!(is_transversal(&Graph::cycle(5), &set(&[3])).unwrap());
        assert!(!is_transversal(&Graph::star(3), &set(&[1])).unwrap());
        assert!(!is_transversal(&Graph::path(4), &VertexSet::new()).unwrap());
        let g = fixture_walther_zamfirescu();
        for v in 0..g.n() {
            assert!(!is_transversal(&g, &set(&[v])).unwrap(), "vertex {v}");
        }
    }

    #[test]
    fn exact_lpt_examples() {
        assert_eq!(exact_lpt(&Graph::path(6)).unwrap(), (1, set(&[0])));
        assert_eq!(exact_lpt(&Graph::complete(4)).unwrap(), (1, set(&[0])));
        assert_eq!(exact_lpt(&Graph::empty(1)).unwrap(), (1, set(&[0])));
        let (k, witness) = exact_lpt(&fixture_walther_zamfirescu()).unwrap();
        assert_eq!(k, 2);
        assert!(is_transversal(&fixture_walther_zamfirescu(), &witness).unwrap());
    }

    #[test]
    fn anchored_examples() {
        let p4 = Graph::path(4);
        let all = VertexSet::full(4);
        assert_eq!(longest_anchored_path_length(&p4, &all, &set(&[0])).unwrap(), Some(3));
        assert_eq!(
            longest_anchored_path_length(&p4, &set(&[1, 2, 3]), &set(&[2])).unwrap(),
            Some(1)
        );
        assert_eq!(longest_anchored_path_length(&p4, &all, &all).unwrap(), Some(3));
        assert_eq!(longest_anchored_path_length(&p4, &all, &VertexSet::new()).unwrap(), None);
        assert!(matches!(
            longest_anchored_path_length(&p4, &set(&[0, 1]), &set(&[2])),
            Err(Error::AnchorsOutsideRegion { vertex: 2 })
        ));
    }

    #[test]
    fn witness_path_avoids_set() {
        let g = Graph::cycle(6);
        let fam = Oracle::default().analyze(&g).unwrap();
        let p = fam.path_avoiding(&set(&[0])).unwrap();
        assert!(p.is_none(), "C6 minus a vertex has only 5 vertices");
        let g = Graph::complete(4);
        let fam = Oracle::default().analyze(&g).unwrap();
        assert!(fam.path_avoiding(&VertexSet::new()).unwrap().unwrap().len() == 3);
    }
}
