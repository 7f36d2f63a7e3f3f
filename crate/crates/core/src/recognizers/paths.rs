use super::{contains_induced, patterns};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};

/// Greedily extends an induced path at both ends until neither end can grow.
///
/// The tail is extended first, then the head; a vertex may be appended when
/// it is adjacent to the current end and to no other path vertex. The lowest
/// such id wins. Growing the head never re-enables the tail, since every new
/// path vertex only adds obstructions.
pub fn maximal_induced_path(g: &Graph, seed: &Path) -> Result<Path> {
    if !seed.is_induced(g) {
        return Err(Error::InvalidPath(format!("seed {seed} is not induced")));
    }
    let mut seq = seed.vertices().to_vec();
    let mut on_path = seed.vertex_set();
    for _ in 0..2 {
        loop {
            let end = *seq.last().unwrap();
            let mut others = on_path.clone();
            others.remove(end);
            let mut blocked = on_path.clone();
            for v in others.iter() {
                blocked.union_with(g.neighbors(v));
            }
            match g.neighbors(end).difference(&blocked).min() {
                Some(w) => {
                    seq.push(w);
                    on_path.insert(w);
                }
                None => break,
            }
        }
        seq.reverse();
    }
    Ok(Path::new_unchecked(seq))
}

/// No vertex outside the path can be attached to either end.
pub fn is_maximal_induced_path(g: &Graph, p: &Path) -> bool {
    if !p.is_induced(g) {
        return false;
    }
    let on = p.vertex_set();
    [p.first(), p.last()].iter().all(|&end| {
        g.neighbors(end).difference(&on).iter().all(|w| {
            let hits = g.neighbors(w).intersection(&on);
            hits != VertexSet::singleton(end)
        })
    })
}

/// Lowest-id vertex of `m` complete to `component`.
pub fn monitor_vertex(g: &Graph, m: &VertexSet, component: &VertexSet) -> Option<usize> {
    m.iter().find(|&w| g.is_complete_to(w, component))
}

/// Every component of `g - m` has a vertex of `m` complete to it.
pub fn is_monitor(g: &Graph, m: &VertexSet) -> bool {
    g.components(&g.vertices().difference(m))
        .iter()
        .all(|c| monitor_vertex(g, m, c).is_some())
}

/// Induced paths on exactly `k` vertices, each once (first endpoint lower
/// than the last), in lexicographic order of vertex sequences.
pub fn induced_paths(g: &Graph, k: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(k);
    for v in 0..g.n() {
        seq.push(v);
        grow(g, k, &mut seq, &mut out);
        seq.pop();
    }
    out
}

fn grow(g: &Graph, k: usize, seq: &mut Vec<usize>, out: &mut Vec<Path>) {
    if seq.len() == k {
        if k == 1 || seq[0] < seq[k - 1] {
            out.push(Path::new_unchecked(seq.clone()));
        }
        return;
    }
    let end = *seq.last().unwrap();
    let mut blocked: VertexSet = seq.iter().copied().collect();
    for &v in &seq[..seq.len() - 1] {
        blocked.union_with(g.neighbors(v));
    }
    for w in g.neighbors(end).difference(&blocked).iter() {
        seq.push(w);
        grow(g, k, seq, out);
        seq.pop();
    }
}

/// An induced path `X` on at most `t - 3` vertices whose closed
/// neighbourhood is a monitor, for connected `P_t`-free `g`, `t ∈ {4,5,6}`.
///
/// Shorter paths are tried first, then lexicographic order. Such a path is
/// known to exist for every start vertex, so exhausting the search means a
/// broken precondition or a bug.
pub fn find_monitor_path(g: &Graph, t: usize) -> Result<Path> {
    assert!((4..=6).contains(&t), "monitor paths are defined for t in 4..=6");
    if g.n() == 0 {
        return Err(Error::EmptySet("graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(witness) = contains_induced(g, &patterns::path(t)) {
        return Err(Error::NotInClass {
            class: format!("P{t}-free"),
            witness,
        });
    }
    for k in 1..=t - 3 {
        for x in induced_paths(g, k) {
            if is_monitor(g, &g.closed_neighborhood(&x.vertex_set())) {
                return Ok(x);
            }
        }
    }
    Err(Error::InternalContradiction(format!(
        "no induced path on at most {} vertices has a monitoring closed neighbourhood",
        t - 3
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximal_induced_path_examples() {
        let p6 = Graph::path(6);
        let whole = Path::new(&p6, (0..6).collect()).unwrap();
        assert_eq!(maximal_induced_path(&p6, &whole).unwrap(), whole);

        let p7 = Graph::path(7);
        let mid = Path::new(&p7, vec![1, 2, 3, 4, 5]).unwrap();
        let q = maximal_induced_path(&p7, &mid).unwrap();
        assert_eq!(q.vertex_set(), VertexSet::full(7));

        let c6 = Graph::cycle(6);
        let q = maximal_induced_path(&c6, &Path::new(&c6, vec![0, 1]).unwrap()).unwrap();
        assert_eq!(q.vertices().len(), 5);
        assert!(is_maximal_induced_path(&c6, &q));

        let c5 = Graph::cycle(5);
        let not_induced = Path::new(&c5, vec![0, 1, 2, 3, 4]).unwrap();
        assert!(maximal_induced_path(&c5, &not_induced).is_err());
    }

    #[test]
    fn monitor_examples() {
        assert!(is_monitor(&Graph::star(3), &VertexSet::from([0])));
        assert!(!is_monitor(&Graph::path(4), &VertexSet::from([1])));
        assert!(is_monitor(&Graph::path(4), &VertexSet::full(4)));
    }

    #[test]
    fn monitor_path_examples() {
        let k4 = Graph::complete(4);
        let x = find_monitor_path(&k4, 5).unwrap();
        assert_eq!(x.vertices(), &[0]);
        let c5 = Graph::cycle(5);
        let x = find_monitor_path(&c5, 5).unwrap();
        assert!(x.vertices().len() <= 2);
        assert!(is_monitor(&c5, &c5.closed_neighborhood(&x.vertex_set())));
        assert!(matches!(
            find_monitor_path(&Graph::path(5), 5),
            Err(Error::NotInClass { .. })
        ));
        assert!(matches!(find_monitor_path(&Graph::empty(2), 5), Err(Error::Disconnected)));
    }

    #[test]
    fn induced_path_listing() {
        let c5 = Graph::cycle(5);
        assert_eq!(induced_paths(&c5, 4).len(), 5);
        assert_eq!(induced_paths(&c5, 5).len(), 0);
        assert_eq!(induced_paths(&Graph::complete(4), 2).len(), 6);
    }
}
