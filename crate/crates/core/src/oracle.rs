//! Brute-force reference implementations for small graphs.
//!
//! These exist to certify the real algorithms: every function here works by
//! exhaustive enumeration straight from the definitions and shares no
//! traversal logic with the production code paths. Size guards are hard
//! errors so an oracle can never silently pretend to certify beyond its
//! range.

use crate::graph::{Graph, VertexSet};
use crate::realizer::Realizer;

/// Largest vertex count accepted by the subset-enumeration oracles.
pub const MODULE_LIMIT: usize = 12;
/// Largest vertex count accepted by [`brute_iso`].
pub const ISO_LIMIT: usize = 8;
/// Largest vertex count accepted by [`brute_realizer_search`].
pub const REALIZER_LIMIT: usize = 6;

fn guard(n: usize, limit: usize, what: &str) {
    assert!(
        n <= limit,
        "oracle size guard: {what} supports n <= {limit}, got n = {n}"
    );
}

/// All modules of `g`, by checking every non-empty vertex subset against the
/// definition: each outside vertex sees all of the set or none of it.
pub fn brute_modules(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    guard(n, MODULE_LIMIT, "brute_modules");
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut is_module = true;
        'outside: for v in (0..n).filter(|&v| mask >> v & 1 == 0) {
            for (i, &w) in members.iter().enumerate() {
                for &w2 in &members[i + 1..] {
                    if g.has_edge(v, w) != g.has_edge(v, w2) {
                        is_module = false;
                        break 'outside;
                    }
                }
            }
        }
        if is_module {
            out.push(VertexSet::from_vertices(n, members));
        }
    }
    out
}

/// The smallest module containing `v` and `w`: the intersection of all
/// modules that contain both.
pub fn brute_min_module(g: &Graph, v: usize, w: usize) -> VertexSet {
    let mut out = VertexSet::full(g.vertex_count());
    for m in brute_modules(g) {
        if m.contains(v) && m.contains(w) {
            out.intersect_with(&m);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    // Heap's algorithm, iterative form.
    let mut counters = vec![0usize; n];
    out.push(current.clone());
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                current.swap(0, i);
            } else {
                current.swap(counters[i], i);
            }
            out.push(current.clone());
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

/// Isomorphism by exhaustive bijection search.
pub fn brute_iso(g1: &Graph, g2: &Graph) -> bool {
    guard(g1.vertex_count(), ISO_LIMIT, "brute_iso");
    guard(g2.vertex_count(), ISO_LIMIT, "brute_iso");
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut degrees1: Vec<_> = (0..n).map(|v| g1.degree(v)).collect();
    let mut degrees2: Vec<_> = (0..n).map(|v| g2.degree(v)).collect();
    degrees1.sort_unstable();
    degrees2.sort_unstable();
    if degrees1 != degrees2 {
        return false;
    }
    permutations(n).iter().any(|perm| {
        (0..n).all(|u| (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(perm[u], perm[v])))
    })
}

/// All realizers of `g`, by double enumeration of permutation pairs and the
/// inversion rule: an edge exactly where the two orders disagree.
pub fn brute_realizer_search(g: &Graph) -> Vec<Realizer> {
    let n = g.vertex_count();
    guard(n, REALIZER_LIMIT, "brute_realizer_search");
    let perms = permutations(n);
    let mut out = Vec::new();
    for order1 in &perms {
        let mut pos1 = vec![0usize; n];
        for (i, &v) in order1.iter().enumerate() {
            pos1[v] = i;
        }
        'candidate: for order2 in &perms {
            let mut pos2 = vec![0usize; n];
            for (i, &v) in order2.iter().enumerate() {
                pos2[v] = i;
            }
            for u in 0..n {
                for v in u + 1..n {
                    let inverted = (pos1[u] < pos1[v]) != (pos2[u] < pos2[v]);
                    if inverted != g.has_edge(u, v) {
                        continue 'candidate;
                    }
                }
            }
            out.push(Realizer {
                order1: order1.clone(),
                order2: order2.clone(),
            });
        }
    }
    out
}

fn split_by(g: &Graph, vertices: &[usize], adjacent: bool) -> Vec<Vec<usize>> {
    let mut unassigned: Vec<usize> = vertices.to_vec();
    let mut parts = Vec::new();
    while let Some(start) = unassigned.first().copied() {
        let mut part = vec![start];
        let mut frontier = vec![start];
        unassigned.retain(|&v| v != start);
        while let Some(u) = frontier.pop() {
            let (linked, rest): (Vec<usize>, Vec<usize>) = unassigned
                .iter()
                .partition(|&&v| g.has_edge(u, v) == adjacent);
            unassigned = rest;
            part.extend(&linked);
            frontier.extend(linked);
        }
        parts.push(part);
    }
    parts
}

fn brute_cograph_rec(g: &Graph, vertices: &[usize]) -> bool {
    if vertices.len() == 1 {
        return true;
    }
    let components = split_by(g, vertices, true);
    if components.len() > 1 {
        return components.iter().all(|part| brute_cograph_rec(g, part));
    }
    let co_components = split_by(g, vertices, false);
    if co_components.len() > 1 {
        return co_components.iter().all(|part| brute_cograph_rec(g, part));
    }
    false
}

/// Cograph recognition straight from the constructive definition: a single
/// vertex, or a disconnected graph whose components are all cographs, or the
/// complement of one.
pub fn brute_cograph(g: &Graph) -> bool {
    guard(g.vertex_count(), MODULE_LIMIT, "brute_cograph");
    let vertices: Vec<usize> = g.vertices().collect();
    brute_cograph_rec(g, &vertices)
}

fn components_within(g: &Graph, set: &VertexSet, adjacent: bool) -> Vec<VertexSet> {
    let members = set.to_vec();
    split_by(g, &members, adjacent)
        .into_iter()
        .map(|part| VertexSet::from_vertices(g.vertex_count(), part))
        .collect()
}

/// One step of the recursive decomposition: the canonical proper module of
/// the subgraph induced by `set` that contains `v`, i.e. its component,
/// co-component, or maximal proper module.
pub fn brute_maximal_proper_module(g: &Graph, set: &VertexSet, v: usize) -> VertexSet {
    assert!(set.contains(v));
    let n = g.vertex_count();
    if set.len() == 1 {
        return set.clone();
    }
    let components = components_within(g, set, true);
    if components.len() > 1 {
        return components.into_iter().find(|c| c.contains(v)).unwrap();
    }
    let co_components = components_within(g, set, false);
    if co_components.len() > 1 {
        return co_components.into_iter().find(|c| c.contains(v)).unwrap();
    }
    // Both connected: enumerate the modules of the induced subgraph.
    guard(set.len(), MODULE_LIMIT, "brute_maximal_proper_module");
    let induced = g.induced_subgraph(set);
    let mut best: Option<VertexSet> = None;
    let local_v = induced.position(v).unwrap();
    for m in brute_modules(&induced.graph) {
        if m.contains(local_v)
            && m.len() < set.len()
            && best.as_ref().is_none_or(|b| m.len() > b.len())
        {
            best = Some(m);
        }
    }
    let best = best.expect("singleton modules always qualify");
    VertexSet::from_vertices(n, best.iter().map(|i| induced.original(i)))
}

/// The chain of decomposition sets for a pivot, computed by the recursive
/// route: level 0 is the vertex set, level `i + 1` refines level `i`.
/// Contains `n + 1` entries.
pub fn brute_decomposition_chain(g: &Graph, v: usize) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut chain = vec![VertexSet::full(n)];
    for _ in 0..n {
        let current = chain.last().unwrap();
        chain.push(brute_maximal_proper_module(g, current, v));
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_has_only_trivial_modules() {
        let modules = brute_modules(&Graph::path(4));
        assert_eq!(modules.len(), 5); // four singletons plus the vertex set
        assert!(modules.iter().all(|m| m.len() == 1 || m.len() == 4));
    }

    #[test]
    fn k3_every_subset_is_a_module() {
        assert_eq!(brute_modules(&Graph::complete(3)).len(), 7);
    }

    #[test]
    fn modules_of_2k2() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        let modules = brute_modules(&g);
        // singletons, the two components, their partial unions with the other
        // side, and V: every union of {0},{1},{0,1} with {2},{3},{2,3} is a
        // module here, plus the 6 one-sided sets.
        assert!(modules.contains(&VertexSet::from_vertices(4, [0, 1])));
        assert!(modules.contains(&VertexSet::from_vertices(4, [2, 3])));
        assert!(!modules.contains(&VertexSet::from_vertices(4, [0, 2])));
        assert_eq!(brute_min_module(&g, 0, 2), VertexSet::full(4));
    }

    #[test]
    fn min_module_of_a_pair_on_p4() {
        assert_eq!(brute_min_module(&Graph::path(4), 0, 1), VertexSet::full(4));
        assert_eq!(
            brute_min_module(&Graph::path(4), 2, 2),
            VertexSet::singleton(4, 2)
        );
    }

    #[test]
    fn iso_basics() {
        let g = Graph::path(4);
        assert!(brute_iso(&g, &g));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert!(!brute_iso(&g, &star));
        let c4 = Graph::cycle(4);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert!(!brute_iso(&two_k2, &c4));
    }

    #[test]
    fn realizer_search_counts() {
        assert_eq!(brute_realizer_search(&Graph::new(1)).len(), 1);
        assert_eq!(brute_realizer_search(&Graph::cycle(5)).len(), 0);
    }

    #[test]
    fn cograph_recognition() {
        assert!(!brute_cograph(&Graph::path(4)));
        assert!(brute_cograph(&Graph::complete(3)));
        assert!(brute_cograph(&Graph::from_edges(4, [(0, 1), (2, 3)])));
        // all graphs on up to 3 vertices are cographs
        for mask in 0u32..8 {
            let g = Graph::from_edges(
                3,
                [(0, 1), (0, 2), (1, 2)]
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, e)| e),
            );
            assert!(brute_cograph(&g));
        }
    }

    #[test]
    #[should_panic(expected = "size guard")]
    fn size_guard_is_a_hard_error() {
        brute_modules(&Graph::new(13));
    }
}
