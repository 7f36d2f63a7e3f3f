use crate::graph::{Graph, VertexSet};

/// Finds an induced copy of `pattern` in `g`.
///
/// Returns `emb` with `emb[i]` the image of pattern vertex `i`. Pattern
/// vertices are placed in id order and candidates tried lowest id first, so
/// the answer is the lexicographically first embedding. Candidate sets are
/// narrowed by whole adjacency rows: a candidate must be adjacent to the
/// images of pattern neighbours and non-adjacent to all other images.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    let pdeg: Vec<usize> = (0..k).map(|i| pattern.degree(i)).collect();
    let mut emb = Vec::with_capacity(k);
    let mut used = VertexSet::new();
    if extend(g, pattern, &pdeg, &mut emb, &mut used) {
        Some(emb)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    pattern: &Graph,
    pdeg: &[usize],
    emb: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    let i = emb.len();
    if i == pattern.n() {
        return true;
    }
    let mut cand = g.vertices().difference(used);
    for (j, &image) in emb.iter().enumerate() {
        if pattern.has_edge(i, j) {
            cand = cand.intersection(g.neighbors(image));
        } else {
            cand = cand.difference(g.neighbors(image));
        }
        if cand.is_empty() {
            return false;
        }
    }
    for w in cand.iter() {
        if g.degree(w) < pdeg[i] {
            continue;
        }
        emb.push(w);
        used.insert(w);
        if extend(g, pattern, pdeg, emb, used) {
            return true;
        }
        used.remove(w);
        emb.pop();
    }
    false
}

/// True iff `g` contains none of `patterns` as an induced subgraph.
pub fn is_free_of(g: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| contains_induced(g, p).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognizers::patterns;

    #[test]
    fn examples() {
        assert!(contains_induced(&Graph::path(4), &patterns::matched_clique(2)).is_some());
        assert!(contains_induced(&Graph::cycle(5), &patterns::path(4)).is_some());
        assert!(contains_induced(&Graph::complete(4), &patterns::claw()).is_none());
        assert!(contains_induced(&Graph::cycle(5), &patterns::path(5)).is_none());
    }

    #[test]
    fn embedding_is_induced_and_first() {
        let g = Graph::cycle(6);
        let emb = contains_induced(&g, &patterns::path(5)).unwrap();
        assert_eq!(emb, vec![0, 1, 2, 3, 4]);
        let p = patterns::bull();
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (3, 5)]).unwrap();
        let emb = contains_induced(&g, &p).unwrap();
        for a in 0..p.n() {
            for b in 0..p.n() {
                if a != b {
                    assert_eq!(p.has_edge(a, b), g.has_edge(emb[a], emb[b]));
                }
            }
        }
    }
}
