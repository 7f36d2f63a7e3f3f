use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A graph given as the intersection graph of connected vertex subsets
/// ("segments") of a subdivided host.
///
/// Vertex ids of the subdivision: host vertices keep their ids `0..|H|`;
/// the internal vertices of each host edge follow, edge by edge in
/// ascending `(a, b)` order, each run ordered from `a` toward `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRepresentation {
    host: Graph,
    host_edges: Vec<(usize, usize)>,
    lengths: Vec<usize>,
    h_phi: Graph,
    edge_paths: Vec<Vec<usize>>,
    phi: Vec<VertexSet>,
}

impl HRepresentation {
    /// `lengths[i]` is the number of edges replacing the `i`-th host edge
    /// (ascending order); `phi[v]` is the segment of vertex `v`.
    pub fn new(host: Graph, lengths: Vec<usize>, phi: Vec<VertexSet>) -> Result<Self> {
        if host.n() < 2 {
            return Err(Error::Representation("host needs at least two vertices".into()));
        }
        if !host.is_connected() {
            return Err(Error::Representation("host is not connected".into()));
        }
        let host_edges: Vec<(usize, usize)> = host.edges().collect();
        if lengths.len() != host_edges.len() {
            return Err(Error::Representation(format!(
                "{} subdivision lengths for {} host edges",
                lengths.len(),
                host_edges.len()
            )));
        }
        if let Some(i) = lengths.iter().position(|&l| l == 0) {
            let (a, b) = host_edges[i];
            return Err(Error::Representation(format!("edge {a}-{b} has length 0")));
        }
        let mut next = host.n();
        let mut edge_paths = Vec::with_capacity(host_edges.len());
        let mut sub_edges = Vec::new();
        for (&(a, b), &len) in host_edges.iter().zip(&lengths) {
            let mut path = vec![a];
            path.extend(next..next + len - 1);
            next += len - 1;
            path.push(b);
            sub_edges.extend(path.windows(2).map(|w| (w[0], w[1])));
            edge_paths.push(path);
        }
        let h_phi = Graph::from_edge_list(next, &sub_edges)?;
        for (v, seg) in phi.iter().enumerate() {
            if let Some(x) = seg.max() {
                if x >= h_phi.n() {
                    return Err(Error::Representation(format!(
                        "segment of {v} mentions vertex {x} outside the subdivision"
                    )));
                }
            }
        }
        Ok(Self {
            host,
            host_edges,
            lengths,
            h_phi,
            edge_paths,
            phi,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn host_edges(&self) -> &[(usize, usize)] {
        &self.host_edges
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn h_phi(&self) -> &Graph {
        &self.h_phi
    }

    /// Path `a, …, b` in the subdivision for the `i`-th host edge `(a, b)`.
    pub fn edge_path(&self, i: usize) -> &[usize] {
        &self.edge_paths[i]
    }

    pub fn edge_paths(&self) -> &[Vec<usize>] {
        &self.edge_paths
    }

    /// Number of represented vertices.
    pub fn order(&self) -> usize {
        self.phi.len()
    }

    pub fn phi(&self, v: usize) -> &VertexSet {
        &self.phi[v]
    }

    pub fn segments(&self) -> &[VertexSet] {
        &self.phi
    }

    /// `V_x`: represented vertices whose segment contains `x`.
    pub fn cover(&self, x: usize) -> VertexSet {
        (0..self.phi.len()).filter(|&v| self.phi[v].contains(x)).collect()
    }

    /// Host edge index and position of a subdivision vertex; host vertices
    /// return `None`.
    pub fn locate(&self, x: usize) -> Option<(usize, usize)> {
        if x < self.host.n() {
            return None;
        }
        self.edge_paths
            .iter()
            .enumerate()
            .find_map(|(i, p)| p.iter().position(|&y| y == x).map(|k| (i, k)))
    }

    /// `v<i>` for host vertices, `e<a>-<b>/<k>` for the `k`-th internal
    /// vertex of host edge `ab` counted from `a`.
    pub fn label(&self, x: usize) -> String {
        match self.locate(x) {
            None => format!("v{x}"),
            Some((i, k)) => {
                let (a, b) = self.host_edges[i];
                format!("e{a}-{b}/{k}")
            }
        }
    }

    pub fn parse_label(&self, label: &str) -> Result<usize> {
        let bad = || Error::Representation(format!("bad subdivision label {label:?}"));
        if let Some(rest) = label.strip_prefix('v') {
            let x: usize = rest.parse().map_err(|_| bad())?;
            return if x < self.host.n() { Ok(x) } else { Err(bad()) };
        }
        let rest = label.strip_prefix('e').ok_or_else(bad)?;
        let (ends, k) = rest.split_once('/').ok_or_else(bad)?;
        let (a, b) = parse_pair(ends).ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        let (i, k) = self.edge_position(a, b, k).ok_or_else(bad)?;
        if k == 0 || k >= self.lengths[i] {
            return Err(bad());
        }
        Ok(self.edge_paths[i][k])
    }

    fn edge_position(&self, a: usize, b: usize, k: usize) -> Option<(usize, usize)> {
        let i = self.host_edges.binary_search(&(a.min(b), a.max(b))).ok()?;
        Some(if a < b { (i, k) } else { (i, self.lengths[i].checked_sub(k)?) })
    }

    /// Every segment is nonempty and connected in the subdivision.
    pub fn check_segments(&self) -> Result<()> {
        for (v, seg) in self.phi.iter().enumerate() {
            if seg.is_empty() {
                return Err(Error::Representation(format!("segment of {v} is empty")));
            }
            if !self.h_phi.is_connected_within(seg) {
                return Err(Error::Representation(format!("segment of {v} is disconnected")));
            }
        }
        Ok(())
    }

    /// First violation of niceness: an uncovered subdivision vertex, or a
    /// subdivision edge no segment contains.
    pub fn nice_violation(&self) -> Option<String> {
        let covers: Vec<VertexSet> = (0..self.h_phi.n()).map(|x| self.cover(x)).collect();
        if let Some(x) = covers.iter().position(VertexSet::is_empty) {
            return Some(format!("vertex {} is uncovered", self.label(x)));
        }
        self.h_phi
            .edges()
            .find(|&(x, y)| !covers[x].intersects(&covers[y]))
            .map(|(x, y)| format!("edge {}~{} is uncovered", self.label(x), self.label(y)))
    }

    pub fn is_nice(&self) -> bool {
        self.nice_violation().is_none()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RepJson = serde_json::from_str(text)?;
        let host = Graph::from_edge_list(raw.h.n, &raw.h.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())
            .map_err(|e| Error::Representation(format!("host: {e}")))?;
        let host_edges: Vec<(usize, usize)> = host.edges().collect();
        let mut lengths = vec![1; host_edges.len()];
        for (key, &len) in &raw.subdivision {
            let (a, b) = parse_pair(key)
                .ok_or_else(|| Error::Representation(format!("bad subdivision key {key:?}")))?;
            let i = host_edges
                .binary_search(&(a.min(b), a.max(b)))
                .map_err(|_| Error::Representation(format!("{key} is not a host edge")))?;
            lengths[i] = len;
        }
        let mut keyed = Vec::with_capacity(raw.phi.len());
        for (key, labels) in raw.phi {
            let v: usize = key
                .parse()
                .map_err(|_| Error::Representation(format!("bad vertex key {key:?}")))?;
            keyed.push((v, labels));
        }
        keyed.sort_by_key(|(v, _)| *v);
        if keyed.iter().enumerate().any(|(i, (v, _))| i != *v) {
            return Err(Error::Representation("phi keys must be 0..n".into()));
        }
        let skeleton = Self::new(host.clone(), lengths.clone(), Vec::new())?;
        let phi = keyed
            .iter()
            .map(|(_, labels)| labels.iter().map(|l| skeleton.parse_label(l)).collect())
            .collect::<Result<Vec<VertexSet>>>()?;
        Self::new(host, lengths, phi)
    }

    pub fn to_json(&self) -> String {
        let raw = RepJson {
            h: HostJson {
                n: self.host.n(),
                edges: self.host_edges.iter().map(|&(a, b)| [a, b]).collect(),
            },
            subdivision: self
                .host_edges
                .iter()
                .zip(&self.lengths)
                .map(|(&(a, b), &l)| (format!("{a}-{b}"), l))
                .collect(),
            phi: self
                .phi
                .iter()
                .enumerate()
                .map(|(v, seg)| (v.to_string(), seg.iter().map(|x| self.label(x)).collect()))
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&raw).expect("serialisable");
        out.push('\n');
        out
    }
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once('-')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// The represented graph: `uv` is an edge iff the segments meet.
pub fn realize(rep: &HRepresentation) -> Result<Graph> {
    rep.check_segments()?;
    let n = rep.order();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rep.phi(u).intersects(rep.phi(v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[derive(Serialize, Deserialize)]
struct HostJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    h: HostJson,
    #[serde(default)]
    subdivision: BTreeMap<String, usize>,
    phi: BTreeMap<String, Vec<String>>,
}
