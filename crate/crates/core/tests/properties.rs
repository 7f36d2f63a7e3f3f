//! Randomized invariants, checked against brute force where one exists.

use lpt::generators::{
    gen_chordal, gen_circular_arc, gen_connected, gen_hgraph, gen_interval, SplitMix64,
};
use lpt::hgraph::{decompose, exact_treewidth, normalize_nice, realize, HRepresentation, TreeDecomposition};
use lpt::recognizers::{contains_induced, is_chordal, is_maximal_induced_path, maximal_induced_path, patterns};
use lpt::{Graph, Path, VertexSet};
use proptest::prelude::*;

fn graph(seed: u64, lo: usize, hi: usize) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let n = rng.range(lo, hi);
    let p = 0.1 + 0.8 * rng.unit();
    gen_connected(&mut rng, n, p)
}

/// Every injection of the pattern, tried in lexicographic order.
fn naive_contains(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..k).all(|j| g.has_edge(map[j], v) == h.has_edge(j, k)) {
                map.push(v);
                if extend(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut Vec::new())
}

/// Treewidth as the best elimination order over all permutations.
fn naive_treewidth(g: &Graph) -> usize {
    fn width(g: &Graph, order: &[usize]) -> usize {
        let n = g.n();
        let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        let mut gone = vec![false; n];
        let mut best = 0;
        for &v in order {
            let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
            best = best.max(nb.len());
            for &a in &nb {
                for &b in &nb {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
            gone[v] = true;
        }
        best
    }
    fn permute(g: &Graph, order: &mut Vec<usize>, k: usize, best: &mut usize) {
        if k == order.len() {
            *best = (*best).min(width(g, order));
            return;
        }
        for i in k..order.len() {
            order.swap(k, i);
            permute(g, order, k + 1, best);
            order.swap(k, i);
        }
    }
    let mut best = usize::MAX;
    permute(g, &mut (0..g.n()).collect(), 0, &mut best);
    best
}

fn small_pattern(i: usize) -> Graph {
    [
        patterns::path(3),
        patterns::path(4),
        patterns::cycle(4),
        patterns::claw(),
        patterns::complete(3),
        patterns::matched_clique(2),
    ][i % 6]
        .clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn components_partition(seed in any::<u64>(), mask in any::<u16>()) {
        let g = graph(seed, 1, 12);
        let within: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let parts = g.components(&within);
        let mut union = VertexSet::new();
        for (i, c) in parts.iter().enumerate() {
            prop_assert!(!c.is_empty() && g.is_connected_within(c));
            prop_assert!(!union.intersects(c));
            union.union_with(c);
            for d in &parts[i + 1..] {
                prop_assert!(c.iter().all(|u| d.iter().all(|v| !g.has_edge(u, v))));
            }
        }
        prop_assert_eq!(union, within);
    }

    #[test]
    fn induced_search_matches_injections(seed in any::<u64>(), which in 0usize..6) {
        let g = graph(seed, 1, 8);
        let h = small_pattern(which);
        let found = contains_induced(&g, &h);
        prop_assert_eq!(found.is_some(), naive_contains(&g, &h));
        if let Some(map) = found {
            for a in 0..h.n() {
                for b in 0..h.n() {
                    if a != b {
                        prop_assert_eq!(g.has_edge(map[a], map[b]), h.has_edge(a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn treewidth_matches_all_orders(seed in any::<u64>()) {
        let g = graph(seed, 1, 7);
        let (w, order) = exact_treewidth(&g);
        prop_assert_eq!(w, naive_treewidth(&g));
        prop_assert_eq!(order.len(), g.n());
    }

    #[test]
    fn maximal_induced_paths_cannot_grow(seed in any::<u64>(), start in 0usize..12) {
        let g = graph(seed, 2, 12);
        let v = start % g.n();
        let seed_path = Path::new(&g, vec![v]).unwrap();
        let p = maximal_induced_path(&g, &seed_path).unwrap();
        prop_assert!(p.is_induced(&g) && p.vertices().contains(&v));
        prop_assert!(is_maximal_induced_path(&g, &p));
        let inside = p.vertex_set();
        for end in [p.first(), p.last()] {
            for w in g.neighbors(end).iter().filter(|w| !inside.contains(*w)) {
                // a neighbor seeing only this end would extend the path
                prop_assert!(g.neighbors(w).intersection(&inside).len() > 1);
            }
        }
    }

    #[test]
    fn chordal_generator_and_clique_tree(seed in any::<u64>(), n in 1usize..14, density in 0.05f64..1.0) {
        let inst = gen_chordal(seed, n, density);
        prop_assert_eq!(inst.graph.n(), n);
        prop_assert!(inst.graph.is_connected());
        prop_assert!(is_chordal(&inst.graph).is_some());
        prop_assert!(inst.rep.is_nice());
        prop_assert_eq!(realize(&inst.rep).unwrap(), inst.graph.clone());
    }

    #[test]
    fn interval_and_arc_models_realize(seed in any::<u64>(), n in 1usize..14) {
        let iv = gen_interval(seed, n);
        prop_assert!(iv.graph.is_connected() && is_chordal(&iv.graph).is_some());
        prop_assert_eq!(realize(&iv.rep).unwrap(), iv.graph.clone());
        let arcs = gen_circular_arc(seed, n);
        prop_assert!(arcs.graph.is_connected());
        prop_assert_eq!(realize(&arcs.rep).unwrap(), arcs.graph.clone());
    }

    #[test]
    fn hgraph_instances_are_nice_and_stable(seed in any::<u64>(), n in 2usize..12) {
        let host = graph(seed ^ 0x55, 2, 5);
        let inst = gen_hgraph(seed, &host, n, 3);
        prop_assert!(inst.rep.is_nice());
        prop_assert_eq!(realize(&inst.rep).unwrap(), inst.graph.clone());
        let again = normalize_nice(&inst.rep).unwrap();
        prop_assert_eq!(&again, &inst.rep);
        prop_assert_eq!(normalize_nice(&again).unwrap(), again);
        let back = HRepresentation::from_json(&inst.rep.to_json()).unwrap();
        prop_assert_eq!(back, inst.rep.clone());
    }

    #[test]
    fn decompositions_are_valid(seed in any::<u64>(), n in 2usize..12) {
        let host = graph(seed ^ 0x77, 2, 5);
        let rep = gen_hgraph(seed, &host, n, 3).rep;
        let td = decompose(&rep);
        td.validate(rep.h_phi()).unwrap();
        let host_width = exact_treewidth(rep.host()).0;
        if rep.h_phi().n() <= lpt::hgraph::EXACT_LIMIT {
            prop_assert_eq!(td.width(), host_width);
        } else {
            prop_assert!(td.width() <= host_width.max(2));
        }
        let text = td.to_pace(rep.h_phi().n());
        prop_assert_eq!(TreeDecomposition::from_pace(&text).unwrap(), td);
    }
}
