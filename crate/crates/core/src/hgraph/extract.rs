use std::collections::BTreeMap;

use super::treedec::exact_treewidth;
use super::{realize, HRepresentation, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{LongestPathFamily, Method, Oracle, TransversalCertificate};

/// The node of `td` lying in `T_Φ(P)` for every longest path `P`; the
/// lowest such id.
pub fn helly_bag(rep: &HRepresentation, td: &TreeDecomposition) -> Result<usize> {
    let g = realize(rep)?;
    let family = Oracle::default().analyze(&g)?;
    helly_node(rep, td, &family)
}

fn helly_node(
    rep: &HRepresentation,
    td: &TreeDecomposition,
    family: &LongestPathFamily,
) -> Result<usize> {
    // `T_Φ(P)` depends only on the vertex set of `P`.
    let touched: Vec<VertexSet> = rep.segments().iter().map(|s| td.nodes_meeting(s)).collect();
    let mut common = VertexSet::full(td.node_count());
    for set in family.vertex_sets() {
        let mut nodes = VertexSet::new();
        for v in set.iter() {
            nodes.union_with(&touched[v]);
        }
        common = common.intersection(&nodes);
    }
    common.min().ok_or_else(|| {
        Error::InternalContradiction(
            "no decomposition node meets every longest path; the representation or decomposition is invalid".into(),
        )
    })
}

/// The subdivision with only host vertices and one bag kept as branch
/// points: every maximal run of other vertices becomes part of an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intermediate {
    pub graph: Graph,
    /// Subdivision id of each vertex of `graph`, ascending.
    pub kept: Vec<usize>,
    /// For each edge `(u, v)` of `graph` in `edges()` order, its path in the
    /// subdivision from `kept[u]` to `kept[v]`.
    pub paths: Vec<Vec<usize>>,
}

impl Intermediate {
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.kept.binary_search(&x).ok()
    }

    /// The subdivision path of edge `ab`, read from `a`.
    pub fn oriented_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let (u, v) = (a.min(b), a.max(b));
        let i = self.graph.edges().position(|e| e == (u, v))?;
        let mut p = self.paths[i].clone();
        if a > b {
            p.reverse();
        }
        Some(p)
    }
}

pub fn intermediate_graph(rep: &HRepresentation, td: &TreeDecomposition, t: usize) -> Intermediate {
    let mut keep: VertexSet = (0..rep.host().n()).collect();
    keep.union_with(&td.bags[t]);
    let kept = keep.to_vec();
    let index = |x: usize| kept.binary_search(&x).expect("kept vertex");
    let mut pieces: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    for path in rep.edge_paths() {
        let mut start = 0;
        for k in 1..path.len() {
            if keep.contains(path[k]) {
                let mut piece = path[start..=k].to_vec();
                let (u, v) = (index(piece[0]), index(path[k]));
                if u > v {
                    piece.reverse();
                }
                pieces.push(((u.min(v), u.max(v)), piece));
                start = k;
            }
        }
    }
    pieces.sort();
    let edges: Vec<(usize, usize)> = pieces.iter().map(|(e, _)| *e).collect();
    Intermediate {
        graph: Graph::from_edge_list(kept.len(), &edges).expect("simple host gives a simple graph"),
        kept,
        paths: pieces.into_iter().map(|(_, p)| p).collect(),
    }
}

/// Length of the longest prefix of `path` inside the segment of `v`.
pub fn reach(rep: &HRepresentation, v: usize, path: &[usize]) -> Result<usize> {
    let seg = rep.phi(v);
    if !path.first().is_some_and(|&a| seg.contains(a)) {
        return Err(Error::Representation(format!(
            "vertex {v} is not represented at the start of the path"
        )));
    }
    Ok(path.iter().take_while(|&&x| seg.contains(x)).count())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Selection {
    pub x: usize,
    pub a: usize,
    pub b: usize,
    pub vertex: usize,
    pub reach: usize,
}

/// `lhs ≤ rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCheck {
    pub lhs: usize,
    pub rhs: usize,
}

impl SizeCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// Every intermediate object of one extraction. Subdivision vertices are
/// named by their ids in the representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionTrace {
    pub helly_node: usize,
    pub x_bag: VertexSet,
    pub v_x: BTreeMap<usize, VertexSet>,
    /// Union of the `V_x`.
    pub s: VertexSet,
    pub intermediate: Intermediate,
    pub a_x: BTreeMap<usize, VertexSet>,
    pub selections: Vec<Selection>,
    pub q: VertexSet,
    pub width: usize,
    pub host_treewidth: usize,
    pub host_edges: usize,
    /// `|V(Ĥ)| ≤ |V(H)| + width + 1`.
    pub vertices_check: SizeCheck,
    /// `|E(Ĥ)| ≤ |E(H)| + width + 1`.
    pub s1: SizeCheck,
    /// `|Q| ≤ 2·|X|·|E(Ĥ)|`.
    pub s2: SizeCheck,
    /// `|Q| ≤ 4(width+1)|E(H)|`, only when the width is optimal and the
    /// host has at least two edges.
    pub theorem: Option<SizeCheck>,
    pub notes: Vec<String>,
}

/// Picks, for every bag vertex `x`, kept vertex `a` meeting `V_x` and edge
/// `ab` of the intermediate graph, the member of `V_x ∩ V_a` reaching
/// furthest from `a` toward `b` (lowest id on ties). The union is a
/// longest path transversal.
pub fn extract_q(
    rep: &HRepresentation,
    td: &TreeDecomposition,
) -> Result<(TransversalCertificate, ExtractionTrace)> {
    if let Some(why) = rep.nice_violation() {
        return Err(Error::Representation(format!("representation is not nice: {why}")));
    }
    td.validate(rep.h_phi())?;
    let g = realize(rep)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let family = Oracle::default().analyze(&g)?;
    let t = helly_node(rep, td, &family)?;
    let x_bag = td.bags[t].clone();
    let v_x: BTreeMap<usize, VertexSet> = x_bag.iter().map(|x| (x, rep.cover(x))).collect();
    let mut s = VertexSet::new();
    for vx in v_x.values() {
        s.union_with(vx);
    }
    let hat = intermediate_graph(rep, td, t);
    let v_a: Vec<VertexSet> = hat.kept.iter().map(|&a| rep.cover(a)).collect();

    let mut a_x = BTreeMap::new();
    let mut selections = Vec::new();
    for (&x, vx) in &v_x {
        let mut ax = VertexSet::new();
        for (ai, &a) in hat.kept.iter().enumerate() {
            let pool = vx.intersection(&v_a[ai]);
            if pool.is_empty() {
                continue;
            }
            ax.insert(a);
            for bi in hat.graph.neighbors(ai).iter() {
                let b = hat.kept[bi];
                let path = hat.oriented_path(ai, bi).expect("edge of the intermediate graph");
                let mut best: Option<(usize, usize)> = None;
                for v in pool.iter() {
                    let r = reach(rep, v, &path)?;
                    if best.is_none_or(|(br, _)| r > br) {
                        best = Some((r, v));
                    }
                }
                let (reach, vertex) = best.expect("pool is nonempty");
                selections.push(Selection { x, a, b, vertex, reach });
            }
        }
        a_x.insert(x, ax);
    }
    let q: VertexSet = selections.iter().map(|sel| sel.vertex).collect();

    let width = td.width();
    let (host_treewidth, _) = exact_treewidth(rep.host());
    let host_edges = rep.host().edge_count();
    let e_hat = hat.graph.edge_count();
    let vertices_check = SizeCheck {
        lhs: hat.graph.n(),
        rhs: rep.host().n() + width + 1,
    };
    let s1 = SizeCheck {
        lhs: e_hat,
        rhs: host_edges + width + 1,
    };
    let s2 = SizeCheck {
        lhs: q.len(),
        rhs: 2 * x_bag.len() * e_hat,
    };
    let mut notes = Vec::new();
    let theorem = if host_edges < 2 {
        notes.push("host has a single edge; theorem constant not checked".to_string());
        None
    } else if width != host_treewidth {
        notes.push(format!(
            "decomposition width {width} differs from host treewidth {host_treewidth}; theorem constant not checked"
        ));
        None
    } else {
        Some(SizeCheck {
            lhs: q.len(),
            rhs: 4 * (width + 1) * host_edges,
        })
    };
    if width > host_treewidth {
        notes.push(format!("width {width} exceeds host treewidth {host_treewidth}"));
    }

    if let Some(path) = family.path_avoiding(&q)? {
        return Err(Error::InternalContradiction(format!(
            "extracted set {q} misses longest path {path}"
        )));
    }
    let certificate = TransversalCertificate {
        transversal: q.clone(),
        bound_claimed: Some(theorem.map_or(s2.rhs, |c| c.rhs)),
        method: Method::HGraph,
        verified: true,
    };
    let trace = ExtractionTrace {
        helly_node: t,
        x_bag,
        v_x,
        s,
        intermediate: hat,
        a_x,
        selections,
        q,
        width,
        host_treewidth,
        host_edges,
        vertices_check,
        s1,
        s2,
        theorem,
        notes,
    };
    Ok((certificate, trace))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimsReport {
    /// Per bag vertex: `Q ∩ V_x` dominates `bd(V(G) ∖ S, S ∩ V_x)`.
    pub claim1: Vec<(usize, bool)>,
    /// `Q` meets every longest path (`None` when the oracle cannot run).
    pub claim2: Option<bool>,
    pub cliques: bool,
    pub q_meets_every_vx: bool,
    pub q_within_s: bool,
    pub vertices_check: bool,
    pub s1: bool,
    pub s2: bool,
    pub theorem: Option<bool>,
}

impl ClaimsReport {
    pub fn all_pass(&self) -> bool {
        self.claim1.iter().all(|&(_, ok)| ok)
            && self.claim2 == Some(true)
            && self.cliques
            && self.q_meets_every_vx
            && self.q_within_s
            && self.vertices_check
            && self.s1
            && self.s2
            && self.theorem != Some(false)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .claim1
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(x, _)| format!("claim1(x={x})"))
            .collect();
        let flags = [
            ("claim2", self.claim2 == Some(true)),
            ("cliques", self.cliques),
            ("q_meets_every_vx", self.q_meets_every_vx),
            ("q_within_s", self.q_within_s),
            ("vertices", self.vertices_check),
            ("s1", self.s1),
            ("s2", self.s2),
            ("theorem", self.theorem != Some(false)),
        ];
        out.extend(flags.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.to_string()));
        out
    }
}

/// Rechecks a trace against the represented graph from scratch.
pub fn verify_claims(trace: &ExtractionTrace, g: &Graph) -> ClaimsReport {
    let outside = g.vertices().difference(&trace.s);
    let claim1 = trace
        .v_x
        .iter()
        .map(|(&x, vx)| {
            let border = g.boundary(&outside, vx).unwrap_or_default();
            (x, g.dominates(&trace.q.intersection(vx), &border))
        })
        .collect();
    let oracle = Oracle::default();
    let claim2 = oracle.feasible(g).then(|| oracle.is_transversal(g, &trace.q).unwrap_or(false));
    ClaimsReport {
        claim1,
        claim2,
        cliques: trace.v_x.values().all(|vx| g.is_clique(vx)),
        q_meets_every_vx: trace.v_x.values().all(|vx| trace.q.intersects(vx)),
        q_within_s: trace.q.is_subset(&trace.s),
        vertices_check: trace.vertices_check.holds(),
        s1: trace.s1.holds(),
        s2: trace.s2.holds(),
        theorem: trace.theorem.map(|c| c.holds()),
    }
}
