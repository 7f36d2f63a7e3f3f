//! Refining a known longest path transversal through domination.
//!
//! Given a transversal `M`, a connected dominating set `D` of `G[M]`, and a
//! set `S ⊆ M` dominating the boundary of a path-maximal component of
//! `G - M`, the union `D ∪ S` is again a transversal. Every hypothesis is
//! checked when a [`RefinementInput`] is built; a certificate produced from
//! broken hypotheses would be meaningless.

use std::cmp::Reverse;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};
use crate::oracle::{Method, Oracle, TransversalCertificate};

/// A component of `G - M` with its boundary toward `M` and the length of
/// the longest path inside it that ends on that boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    pub component: VertexSet,
    /// `None` when the boundary is empty (only possible for empty `M`).
    pub t_value: Option<usize>,
    pub boundary: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RefinementViolation {
    #[error("M misses the longest path {path}")]
    NotTransversal { path: Path },
    #[error("M has {n} vertices beyond the oracle limit {limit} and was not asserted a transversal")]
    Unverifiable { n: usize, limit: usize },
    #[error("{set} contains {vertex}, which is not in M")]
    NotSubset { set: &'static str, vertex: usize },
    #[error("D is empty")]
    EmptyD,
    #[error("{0} does not induce a connected subgraph")]
    Disconnected(&'static str),
    #[error("{set} leaves vertex {vertex} undominated")]
    Undominated { set: &'static str, vertex: usize },
}

/// Components of `g - m`, most path-maximal first (ties: smaller minimum id).
pub fn component_profiles(g: &Graph, m: &VertexSet) -> Result<Vec<ComponentProfile>> {
    g.check_subset(m)?;
    let oracle = Oracle::default();
    let mut out = Vec::new();
    for component in g.components(&g.vertices().difference(m)) {
        let boundary = g.boundary(&component, m)?;
        let t_value = oracle.longest_anchored_path_length(g, &component, &boundary)?;
        out.push(ComponentProfile {
            component,
            t_value,
            boundary,
        });
    }
    out.sort_by_key(|p| (Reverse(p.t_value), p.component.min()));
    Ok(out)
}

/// The path-maximal component of `g - m`; `None` means `m` covers `g`.
pub fn path_maximal_component(g: &Graph, m: &VertexSet) -> Result<Option<ComponentProfile>> {
    Ok(component_profiles(g, m)?.into_iter().next())
}

/// Validated hypotheses of the refinement step.
#[derive(Clone, Debug)]
pub struct RefinementInput<'g> {
    g: &'g Graph,
    m: VertexSet,
    d: VertexSet,
    s: VertexSet,
    path_maximal: Option<ComponentProfile>,
    m_trusted: bool,
}

impl<'g> RefinementInput<'g> {
    /// Checks every hypothesis; `m` must be oracle-verifiable.
    pub fn new(g: &'g Graph, m: VertexSet, d: VertexSet, s: VertexSet) -> Result<Self> {
        Self::build(g, m, d, s, false)
    }

    /// Like [`RefinementInput::new`], but when `g` is beyond the oracle the
    /// caller's assertion that `m` is a transversal is accepted and recorded.
    pub fn new_trusted(g: &'g Graph, m: VertexSet, d: VertexSet, s: VertexSet) -> Result<Self> {
        Self::build(g, m, d, s, true)
    }

    fn build(g: &'g Graph, m: VertexSet, d: VertexSet, s: VertexSet, trust: bool) -> Result<Self> {
        g.check_subset(&m)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if let Some(v) = d.first_outside(&m) {
            return Err(RefinementViolation::NotSubset { set: "D", vertex: v }.into());
        }
        if let Some(v) = s.first_outside(&m) {
            return Err(RefinementViolation::NotSubset { set: "S", vertex: v }.into());
        }
        if d.is_empty() {
            return Err(RefinementViolation::EmptyD.into());
        }
        if !g.is_connected_within(&d) {
            return Err(RefinementViolation::Disconnected("D").into());
        }
        if let Some(v) = g.first_undominated(&d, &m) {
            return Err(RefinementViolation::Undominated { set: "D", vertex: v }.into());
        }

        let oracle = Oracle::default();
        let m_trusted = if oracle.feasible(g) {
            let family = oracle.analyze(g)?;
            if let Some(path) = family.path_avoiding(&m)? {
                return Err(RefinementViolation::NotTransversal { path }.into());
            }
            false
        } else if trust {
            true
        } else {
            return Err(RefinementViolation::Unverifiable {
                n: g.n(),
                limit: oracle.limits.dp,
            }
            .into());
        };

        let path_maximal = if g.n() - m.len() <= oracle.limits.dp {
            path_maximal_component(g, &m)?
        } else {
            return Err(Error::SizeLimit {
                what: "path-maximal component",
                n: g.n() - m.len(),
                limit: oracle.limits.dp,
            });
        };
        if let Some(p) = &path_maximal {
            if let Some(v) = g.first_undominated(&s, &p.boundary) {
                return Err(RefinementViolation::Undominated { set: "S", vertex: v }.into());
            }
        }
        Ok(Self {
            g,
            m,
            d,
            s,
            path_maximal,
            m_trusted,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn m(&self) -> &VertexSet {
        &self.m
    }

    pub fn d(&self) -> &VertexSet {
        &self.d
    }

    pub fn s(&self) -> &VertexSet {
        &self.s
    }

    pub fn path_maximal(&self) -> Option<&ComponentProfile> {
        self.path_maximal.as_ref()
    }

    /// `M` was accepted on the caller's word rather than checked.
    pub fn m_trusted(&self) -> bool {
        self.m_trusted
    }
}

/// Emits `D ∪ S`, oracle-verified when the graph is small enough.
pub fn refine_transversal(input: &RefinementInput<'_>) -> Result<TransversalCertificate> {
    let transversal = input.d.union(&input.s);
    certify(input.g, transversal, Method::Refine, None)
}

/// A connected dominating set is a transversal.
pub fn cds_transversal(g: &Graph, d: &VertexSet) -> Result<TransversalCertificate> {
    g.check_subset(d)?;
    if d.is_empty() {
        return Err(RefinementViolation::EmptyD.into());
    }
    if !g.is_connected_within(d) {
        return Err(RefinementViolation::Disconnected("D").into());
    }
    if let Some(v) = g.first_undominated(d, &g.vertices()) {
        return Err(RefinementViolation::Undominated { set: "D", vertex: v }.into());
    }
    certify(g, d.clone(), Method::Cds, None)
}

/// Wraps a claimed transversal; checks it with the oracle when feasible.
/// A failed check is a contradiction, not an unverified certificate.
pub(crate) fn certify(
    g: &Graph,
    transversal: VertexSet,
    method: Method,
    bound_claimed: Option<usize>,
) -> Result<TransversalCertificate> {
    let oracle = Oracle::default();
    let verified = if oracle.feasible(g) {
        if let Some(path) = oracle.analyze(g)?.path_avoiding(&transversal)? {
            return Err(Error::InternalContradiction(format!(
                "{method} certificate {transversal} misses longest path {path}"
            )));
        }
        true
    } else {
        false
    };
    Ok(TransversalCertificate {
        transversal,
        bound_claimed,
        method,
        verified,
    })
}

/// An inclusion-minimal `D ⊆ pool` dominating `target`.
///
/// Greedy cover (most newly dominated targets, lowest id on ties), then one
/// pruning pass in descending id order.
pub fn minimal_dominating_subset(
    g: &Graph,
    pool: &VertexSet,
    target: &VertexSet,
) -> Result<VertexSet> {
    g.check_subset(pool)?;
    g.check_subset(target)?;
    if let Some(v) = g.first_undominated(pool, target) {
        return Err(Error::NotDominated { vertex: v });
    }
    let mut open = target.clone();
    let mut chosen = VertexSet::new();
    while !open.is_empty() {
        let best = pool
            .difference(&chosen)
            .iter()
            .max_by_key(|&v| {
                let covers = g.closed_neighborhood(&VertexSet::singleton(v));
                (covers.intersection(&open).len(), Reverse(v))
            })
            .expect("pool dominates target");
        chosen.insert(best);
        open = open.difference(&g.closed_neighborhood(&VertexSet::singleton(best)));
    }
    for v in chosen.to_vec().into_iter().rev() {
        let mut without = chosen.clone();
        without.remove(v);
        if g.dominates(&without, target) {
            chosen = without;
        }
    }
    Ok(chosen)
}

/// For each member of `d` (ascending), the lowest target vertex dominated by
/// that member and by no other member of `d`.
pub fn private_neighbors(g: &Graph, d: &VertexSet, target: &VertexSet) -> Vec<Option<usize>> {
    d.iter()
        .map(|member| {
            target.iter().find(|&t| {
                let dominators = g.closed_neighborhood(&VertexSet::singleton(t)).intersection(d);
                dominators == VertexSet::singleton(member)
            })
        })
        .collect()
}
