//! Realizers of permutation graphs.
//!
//! A realizer is a pair of strict linear orders on the vertex set whose
//! inversions are exactly the edges. On a prime permutation graph the
//! realizer is unique up to reversal and exchange, and it can be recovered
//! deterministically: seed the first order with a chosen start vertex below
//! everything else, then alternate the closure under the edge relation with
//! the transitive closure until the pair stops growing.

use crate::graph::{Graph, VertexSet};

/// A binary relation on the vertices of a host graph, stored as successor
/// rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<VertexSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            rows: vec![VertexSet::empty(n); n],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn insert(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |v| (u, v)))
    }

    pub fn transitive_closure(&self) -> Relation {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let row_k = rows[k].clone();
            for row in &mut rows {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Relation { rows }
    }

    pub fn is_irreflexive(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(u, row)| !row.contains(u))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.rows.len();
        (0..n).all(|u| {
            self.rows[u]
                .iter()
                .all(|v| self.rows[v].is_subset(&self.rows[u]))
        })
    }

    /// Strict linear order: irreflexive, transitive, and any two distinct
    /// elements comparable.
    pub fn is_strict_linear_order(&self) -> bool {
        let n = self.rows.len();
        self.is_irreflexive()
            && self.is_transitive()
            && (0..n).all(|u| (u + 1..n).all(|v| self.contains(u, v) != self.contains(v, u)))
    }

    /// Strict weak order: a strict partial order whose incomparability is
    /// transitive.
    pub fn is_strict_weak_order(&self) -> bool {
        if !self.is_irreflexive() || !self.is_transitive() {
            return false;
        }
        let n = self.rows.len();
        let incomparable = |u: usize, v: usize| !self.contains(u, v) && !self.contains(v, u);
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if incomparable(u, v) && incomparable(v, w) && !incomparable(u, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Reads a strict linear order off as a vertex sequence; `None` if the
    /// relation is not one.
    pub fn to_sequence(&self) -> Option<Vec<usize>> {
        if !self.is_strict_linear_order() {
            return None;
        }
        let n = self.rows.len();
        let mut order = vec![0usize; n];
        for u in 0..n {
            order[n - 1 - self.rows[u].len()] = u;
        }
        Some(order)
    }
}

/// A pair of binary relations on the same vertex set; the working state of
/// the realizer reconstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPair {
    pub rel1: Relation,
    pub rel2: Relation,
}

impl RelationPair {
    pub fn empty(n: usize) -> Self {
        RelationPair {
            rel1: Relation::empty(n),
            rel2: Relation::empty(n),
        }
    }
}

/// The closure of a relation pair under the edge relation: whenever `u` is
/// below `v` in one relation, the other relation gains `(v, u)` if they are
/// adjacent and `(u, v)` if they are not. The result is the minimal superset
/// of the pair that is closed under these two rules.
pub fn closure_under_e(g: &Graph, p: &RelationPair) -> RelationPair {
    let mut out = p.clone();
    for (source, target) in [(&p.rel1, &mut out.rel2), (&p.rel2, &mut out.rel1)] {
        for (u, v) in source.pairs() {
            if g.has_edge(u, v) {
                target.insert(v, u);
            } else {
                target.insert(u, v);
            }
        }
    }
    out
}

/// Componentwise transitive closure.
pub fn transitive_pair_closure(p: &RelationPair) -> RelationPair {
    RelationPair {
        rel1: p.rel1.transitive_closure(),
        rel2: p.rel2.transitive_closure(),
    }
}

/// Runs the realizer reconstruction from start vertex `w`: the first
/// relation is seeded with `w` below every other vertex, and the pair is
/// closed under the edge relation and transitivity until stationary.
///
/// On a prime permutation graph that has a realizer starting at `w`, the
/// fixed point is exactly that realizer.
pub fn realizer_fixpoint(g: &Graph, w: usize) -> RelationPair {
    let n = g.vertex_count();
    let mut current = RelationPair::empty(n);
    for v in 0..n {
        if v != w {
            current.rel1.insert(w, v);
        }
    }
    // Each round adds at least one pair, so the loop is bounded by the size
    // of the relation lattice.
    let mut rounds = 0;
    loop {
        let next = transitive_pair_closure(&closure_under_e(g, &current));
        rounds += 1;
        assert!(
            rounds <= n * n + 2,
            "fixpoint failed to stabilize within the lattice height"
        );
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Checks whether a relation pair is a realizer of `g`: both relations are
/// strict linear orders and the inversions between them are exactly the
/// edges.
pub fn check_realizer(g: &Graph, p: &RelationPair) -> bool {
    if !p.rel1.is_strict_linear_order() || !p.rel2.is_strict_linear_order() {
        return false;
    }
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let inverted = p.rel1.contains(u, v) != p.rel2.contains(u, v);
            if inverted != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// A realizer as a pair of vertex sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Realizer {
    pub order1: Vec<usize>,
    pub order2: Vec<usize>,
}

impl Realizer {
    /// The permutation graph this realizer realizes: an edge wherever the
    /// two orders disagree.
    pub fn realized_graph(&self) -> Graph {
        let n = self.order1.len();
        let mut pos1 = vec![0usize; n];
        let mut pos2 = vec![0usize; n];
        for (i, &v) in self.order1.iter().enumerate() {
            pos1[v] = i;
        }
        for (i, &v) in self.order2.iter().enumerate() {
            pos2[v] = i;
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if (pos1[u] < pos1[v]) != (pos2[u] < pos2[v]) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// All realizers of a prime graph, found by running the fixpoint from every
/// start vertex and keeping the runs that verify. An empty result means the
/// graph has no realizer, i.e. it is not a permutation graph.
///
/// The positive direction is exact: every realizer of a prime graph starts
/// its first order at some vertex, and the fixpoint from that vertex
/// recovers it. The converse — that a failed fixpoint run rules the start
/// vertex out — holds empirically (it is cross-checked against exhaustive
/// search in the test suite) but is an assumption of this routine.
pub fn find_realizers(g: &Graph) -> Vec<Realizer> {
    let mut out: Vec<Realizer> = Vec::new();
    for w in g.vertices() {
        let pair = realizer_fixpoint(g, w);
        if !check_realizer(g, &pair) {
            continue;
        }
        let realizer = Realizer {
            order1: pair.rel1.to_sequence().expect("checked linear"),
            order2: pair.rel2.to_sequence().expect("checked linear"),
        };
        if !out.contains(&realizer) {
            out.push(realizer);
        }
    }
    out
}

/// Five vertices a..e with edges ad, bc, bd, be, cd; a prime permutation
/// graph whose realizer is unique up to reversal and exchange.
#[cfg(test)]
pub(crate) fn sample_prime_permutation_graph() -> Graph {
    Graph::from_edges(5, [(0, 3), (1, 2), (1, 3), (1, 4), (2, 3)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_empty_pair_is_empty() {
        let g = Graph::complete(2);
        let p = RelationPair::empty(2);
        assert_eq!(closure_under_e(&g, &p), p);
    }

    #[test]
    fn closure_edge_rule() {
        let g = Graph::complete(2);
        let mut p = RelationPair::empty(2);
        p.rel1.insert(0, 1);
        let closed = closure_under_e(&g, &p);
        assert!(closed.rel2.contains(1, 0));
        assert_eq!(closed.rel2.pair_count(), 1);
    }

    #[test]
    fn closure_non_edge_rule() {
        let g = Graph::path(3);
        let mut p = RelationPair::empty(3);
        p.rel1.insert(0, 2);
        let closed = closure_under_e(&g, &p);
        assert!(closed.rel2.contains(0, 2));
    }

    #[test]
    fn transitive_closure_chains() {
        let mut p = RelationPair::empty(3);
        p.rel1.insert(0, 1);
        p.rel1.insert(1, 2);
        let closed = transitive_pair_closure(&p);
        assert!(closed.rel1.contains(0, 2));
        assert_eq!(transitive_pair_closure(&closed), closed);
    }

    #[test]
    fn transitive_closure_of_a_chain_of_four() {
        let mut p = RelationPair::empty(4);
        for i in 0..3 {
            p.rel1.insert(i, i + 1);
        }
        assert_eq!(transitive_pair_closure(&p).rel1.pair_count(), 6);
    }

    #[test]
    fn fixpoint_on_trivial_graphs() {
        let p = realizer_fixpoint(&Graph::new(1), 0);
        assert_eq!(p, RelationPair::empty(1));

        let p = realizer_fixpoint(&Graph::complete(2), 0);
        assert!(p.rel1.contains(0, 1));
        assert!(p.rel2.contains(1, 0));
        assert_eq!(p.rel1.pair_count() + p.rel2.pair_count(), 2);
    }

    #[test]
    fn fixpoint_recovers_the_sample_realizer() {
        let g = sample_prime_permutation_graph();
        let p = realizer_fixpoint(&g, 0);
        assert!(check_realizer(&g, &p));
        assert_eq!(p.rel1.to_sequence().unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(p.rel2.to_sequence().unwrap(), vec![3, 0, 2, 4, 1]);
    }

    #[test]
    fn check_realizer_symmetries() {
        let g = sample_prime_permutation_graph();
        let p = realizer_fixpoint(&g, 0);
        let swapped = RelationPair {
            rel1: p.rel2.clone(),
            rel2: p.rel1.clone(),
        };
        assert!(check_realizer(&g, &swapped));

        let reverse = |r: &Relation| {
            let mut out = Relation::empty(r.size());
            for (u, v) in r.pairs() {
                out.insert(v, u);
            }
            out
        };
        let reversed = RelationPair {
            rel1: reverse(&p.rel1),
            rel2: reverse(&p.rel2),
        };
        assert!(check_realizer(&g, &reversed));
    }

    #[test]
    fn four_realizers_on_the_sample_graph() {
        let g = sample_prime_permutation_graph();
        let realizers = find_realizers(&g);
        assert_eq!(realizers.len(), 4);
        let mut firsts: Vec<usize> = realizers.iter().map(|r| r.order1[0]).collect();
        firsts.sort_unstable();
        assert_eq!(firsts, vec![0, 1, 3, 4]);
        for r in &realizers {
            assert_eq!(r.realized_graph(), g);
        }
    }

    #[test]
    fn c5_has_no_realizer() {
        assert!(find_realizers(&Graph::cycle(5)).is_empty());
    }

    #[test]
    fn p4_has_four_realizers() {
        assert_eq!(find_realizers(&Graph::path(4)).len(), 4);
    }
}
