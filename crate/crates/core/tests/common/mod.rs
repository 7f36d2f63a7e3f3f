//! Reference implementations that share no code with the library's oracle.

#![allow(dead_code)]

use lpt::generators::{gen_connected, SplitMix64};
use lpt::Graph;

/// Every longest path by plain depth-first search, each stored once with
/// its first vertex below its last, sorted. Returns the edge length too.
pub fn naive_longest_paths(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut best = 0;
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut stack = Vec::new();
    let mut used = vec![false; n];
    for s in 0..n {
        stack.push(s);
        used[s] = true;
        dfs(&adj, &mut stack, &mut used, &mut best, &mut found);
        used[s] = false;
        stack.pop();
    }
    found.sort();
    (best, found)
}

fn dfs(
    adj: &[Vec<usize>],
    stack: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut usize,
    found: &mut Vec<Vec<usize>>,
) {
    let len = stack.len() - 1;
    if len > *best {
        *best = len;
        found.clear();
    }
    if len == *best && (len == 0 || stack[0] < stack[len]) {
        found.push(stack.clone());
    }
    let last = *stack.last().unwrap();
    for &w in &adj[last] {
        if !used[w] {
            used[w] = true;
            stack.push(w);
            dfs(adj, stack, used, best, found);
            stack.pop();
            used[w] = false;
        }
    }
}

/// Whether `s` meets every longest path, straight from the definition.
pub fn naive_is_transversal(g: &Graph, s: &[usize]) -> bool {
    naive_longest_paths(g).1.iter().all(|p| p.iter().any(|v| s.contains(v)))
}

/// Smallest hitting set of the longest paths by trying subsets in order of size.
pub fn naive_lpt(g: &Graph) -> usize {
    let paths = naive_longest_paths(g).1;
    let n = g.n();
    (1..=n)
        .find(|&k| {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .any(|m| paths.iter().all(|p| p.iter().any(|&v| m >> v & 1 == 1)))
        })
        .unwrap_or(0)
}

pub fn closed_nbhd(g: &Graph, v: usize) -> Vec<usize> {
    let mut out = g.neighbors(v).to_vec();
    out.push(v);
    out
}

pub fn naive_dominates(g: &Graph, d: &[usize], target: &[usize]) -> bool {
    target
        .iter()
        .all(|&t| closed_nbhd(g, t).iter().any(|x| d.contains(x)))
}

/// The seeded corpus of connected graphs on at most `max_n` vertices.
pub fn connected_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let mut rng = SplitMix64::new(SplitMix64::derive(seed, i as u64));
            let n = rng.range(1, max_n);
            let p = 0.1 + 0.8 * rng.unit();
            gen_connected(&mut rng, n, p)
        })
        .collect()
}
