#![allow(dead_code)] // each test binary uses a different subset

//! Shared test corpora: seeded random graphs and exhaustive isomorphism-class
//! enumerations for small vertex counts.

use mdcanon::generate::{random_graph, random_permutation_graph};
use mdcanon::Graph;

/// 500 seeded random graphs with 1..=7 vertices and mixed densities.
pub fn seeded_random_corpus() -> Vec<Graph> {
    let densities = [0.2, 0.35, 0.5, 0.65, 0.8];
    (0..500u64)
        .map(|seed| {
            let n = (seed % 7 + 1) as usize;
            let p = densities[(seed / 7 % 5) as usize];
            random_graph(n, p, seed)
        })
        .collect()
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every graph with exactly `n` vertices, one per isomorphism class.
pub fn all_graphs_on(n: usize) -> Vec<Graph> {
    let pairs = pair_list(n);
    let perms = permutations(n);
    let remap = |mask: u32, perm: &[usize]| -> u32 {
        let mut out = 0u32;
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                let target = pairs.iter().position(|&p| p == (a, b)).unwrap();
                out |= 1 << target;
            }
        }
        out
    };
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if perms.iter().all(|perm| remap(mask, perm) >= mask) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Graph::from_edges(n, edges));
        }
    }
    out
}

/// Every graph with at most `max_n` vertices, one per isomorphism class.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs_on).collect()
}

/// Seeded permutation graphs with 2..=6 vertices.
pub fn permutation_corpus_n6() -> Vec<Graph> {
    (0..120u64)
        .map(|seed| random_permutation_graph((seed % 5 + 2) as usize, seed))
        .collect()
}

/// All `n!` relabelings as permutation vectors.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}
