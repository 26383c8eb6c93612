//! Undirected simple graphs over dense vertex ids `0..n` and fixed-capacity
//! vertex sets with bitset semantics.

use std::fmt;

/// A subset of the vertices `0..capacity` of a host graph.
///
/// Equality, hashing and the subset tests are exact set operations; two sets
/// are only comparable when they are tied to the same capacity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            capacity,
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = Self::empty(capacity);
        for w in &mut set.words {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut set = Self::empty(capacity);
        set.insert(v);
        set
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, vertices: I) -> Self {
        let mut set = Self::empty(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Clears bits beyond `capacity` so that equality stays exact.
    fn trim(&mut self) {
        let tail = self.capacity % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn contains(&self, v: usize) -> bool {
        assert!(
            v < self.capacity,
            "vertex {v} out of range 0..{}",
            self.capacity
        );
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.capacity,
            "vertex {v} out of range 0..{}",
            self.capacity
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(
            v < self.capacity,
            "vertex {v} out of range 0..{}",
            self.capacity
        );
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn min_vertex(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An undirected simple graph on the vertex set `{0..n-1}` with `n >= 1`.
///
/// The adjacency relation is symmetric and irreflexive. Values are immutable
/// once built and safe to share across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// An edgeless graph on `n` vertices. Panics if `n == 0`: the vertex set
    /// of a graph is non-empty.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a graph needs at least one vertex");
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            let mut row = VertexSet::full(self.n);
            for (a, b) in row.words.iter_mut().zip(&self.adj[v].words) {
                *a &= !b;
            }
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|row| row.len() == self.n - 1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|row| row.is_empty())
    }

    /// Connected components, ordered by their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n, start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by a non-empty vertex set, together with the
    /// relabeling onto `{0..|s|-1}`. Panics on an empty set.
    pub fn induced_subgraph(&self, s: &VertexSet) -> InducedSubgraph {
        assert!(!s.is_empty(), "induced subgraph of the empty set");
        assert_eq!(s.capacity(), self.n, "capacity mismatch");
        let vertices = s.to_vec();
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        InducedSubgraph { graph: g, vertices }
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`. Panics unless
    /// `perm` is a permutation of the vertices.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut seen = VertexSet::empty(self.n);
        for &image in perm {
            assert!(!seen.contains(image), "relabeling is not a bijection");
            seen.insert(image);
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph on `{0..k-1}` and the
/// sorted list of original vertex ids, so `vertices[new] = old`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original(&self, new: usize) -> usize {
        self.vertices[new]
    }

    pub fn position(&self, old: usize) -> Option<usize> {
        self.vertices.binary_search(&old).ok()
    }
}
