//! Seeded instance generators.
//!
//! All generators run on ChaCha8 seeded from a caller-provided `u64`, so a
//! given `(kind, n, seed)` triple produces the same graph on every platform
//! and in every run.

use crate::graph::Graph;
use crate::realizer::Realizer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi style graph: each pair becomes an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_cograph_rec(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n == 1 {
        return Graph::new(1);
    }
    let left = rng.random_range(1..n);
    let a = random_cograph_rec(rng, left);
    let b = random_cograph_rec(rng, n - left);
    if rng.random_bool(0.5) {
        a.disjoint_union(&b)
    } else {
        a.join(&b)
    }
}

/// A random cograph built from a random union/join tree on `n` leaves.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cograph_rec(&mut rng, n)
}

/// A random permutation graph: the inversion graph of (identity, shuffle).
pub fn random_permutation_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order1: Vec<usize> = (0..n).collect();
    let mut order2 = order1.clone();
    order2.shuffle(&mut rng);
    Realizer { order1, order2 }.realized_graph()
}

/// A uniformly random relabeling permutation, for invariance tests.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    perm
}
