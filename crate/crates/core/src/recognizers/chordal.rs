use super::{contains_induced, patterns};
use crate::graph::{Graph, VertexSet};

/// Lexicographic BFS order. Ties go to the lowest id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !done[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// A perfect elimination ordering if `g` is chordal.
///
/// The reverse of a LexBFS order is a PEO exactly when the graph is chordal;
/// the ordering is checked before it is returned.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    is_perfect_elimination_ordering(g, &peo).then_some(peo)
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        match later.iter().min_by_key(|&w| pos[w]) {
            None => true,
            Some(u) => {
                let mut rest = later.clone();
                rest.remove(u);
                rest.is_subset(g.neighbors(u))
            }
        }
    })
}

/// Maximal cliques of a chordal graph from its PEO, sorted lexicographically
/// by member lists.
pub fn maximal_cliques(g: &Graph, peo: &[usize]) -> Vec<VertexSet> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<VertexSet> = peo
        .iter()
        .map(|&v| {
            let mut c: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
            c.insert(v);
            c
        })
        .collect();
    let mut cliques: Vec<VertexSet> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            cliques.push(c.clone());
        }
    }
    cliques.sort_by_key(|c| c.to_vec());
    cliques
}

/// Smallest `t` such that `g` has no induced `K_t ⋈ K̄_t`.
///
/// Containment is monotone in `t` (deleting one matched pair of an induced
/// `K_t ⋈ K̄_t` leaves an induced `K_{t-1} ⋈ K̄_{t-1}`), so the first miss
/// is the answer. No `t` with `2t > n` can occur.
pub fn matched_clique_index(g: &Graph) -> usize {
    let mut t = 1;
    while 2 * t <= g.n() && contains_induced(g, &patterns::matched_clique(t)).is_some() {
        t += 1;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&Graph::complete(4)).is_some());
        assert!(is_chordal(&Graph::cycle(4)).is_none());
        assert!(is_chordal(&Graph::cycle(3)).is_some());
        assert!(is_chordal(&Graph::path(7)).is_some());
        // C4 plus a chord
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&g).is_some());
    }

    #[test]
    fn matched_clique_index_examples() {
        assert_eq!(matched_clique_index(&Graph::empty(1)), 1);
        assert_eq!(matched_clique_index(&Graph::path(4)), 3);
        assert_eq!(matched_clique_index(&Graph::complete(5)), 2);
        assert_eq!(matched_clique_index(&patterns::matched_clique(4)), 5);
    }

    #[test]
    fn cliques_of_path() {
        let g = Graph::path(4);
        let peo = is_chordal(&g).unwrap();
        let cl = maximal_cliques(&g, &peo);
        assert_eq!(cl, vec![VertexSet::from([0, 1]), VertexSet::from([1, 2]), VertexSet::from([2, 3])]);
        let k = Graph::complete(4);
        assert_eq!(maximal_cliques(&k, &is_chordal(&k).unwrap()), vec![VertexSet::full(4)]);
    }
}
