//! Modules, the wedge relation, wedge classes, and spanned modules.
//!
//! A module is a vertex set whose members are indistinguishable from the
//! outside: every other vertex is adjacent to all of it or none of it. The
//! smallest module containing a pair of distinct vertices is computed here
//! without any search over candidate sets: it is the union of the pairs in
//! the wedge class of the pair, where wedges chain edges (or non-edges)
//! sharing an endpoint whose far ends are non-adjacent.

use crate::graph::{Graph, VertexSet};

/// Checks whether a non-empty vertex set is a module of `g`: every vertex
/// outside `m` is adjacent to all members or to none. Panics on the empty
/// set, which is not a module candidate.
pub fn is_module(g: &Graph, m: &VertexSet) -> bool {
    assert!(!m.is_empty(), "the empty set is not a module candidate");
    assert_eq!(m.capacity(), g.vertex_count(), "capacity mismatch");
    let size = m.len();
    for v in g.vertices() {
        if m.contains(v) {
            continue;
        }
        let hits = g.neighbors(v).intersection_len(m);
        if hits != 0 && hits != size {
            return false;
        }
    }
    true
}

/// Whether two edges of `g` form a wedge: they share exactly one endpoint
/// and their other endpoints are non-adjacent. Panics if either pair is not
/// an edge.
pub fn wedge(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    assert!(g.has_edge(e.0, e.1), "{e:?} is not an edge");
    assert!(g.has_edge(f.0, f.1), "{f:?} is not an edge");
    for (shared, mine) in [(e.0, e.1), (e.1, e.0)] {
        for (theirs_shared, theirs) in [(f.0, f.1), (f.1, f.0)] {
            if shared == theirs_shared && mine != theirs && !g.has_edge(mine, theirs) {
                return true;
            }
        }
    }
    false
}

/// Which side of the pair universe a wedge class lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairSide {
    Edge,
    NonEdge,
}

/// Identifier of a wedge class: the side (edges of the graph or of its
/// complement) plus the index of the connectivity class on that side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WedgeClassId {
    pub side: PairSide,
    pub class_index: u32,
}

/// The wedge classes of a graph: every pair `{v, w}` of distinct vertices is
/// assigned the connectivity class of the wedge relation on its side.
/// Computed once per graph and then shared read-only; the per-class unions
/// are the spanned modules.
pub struct WedgeClasses {
    n: usize,
    ids: Vec<WedgeClassId>,
    unions: [Vec<VertexSet>; 2],
}

fn pair_index(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

impl WedgeClasses {
    pub fn compute(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut ids = vec![
            WedgeClassId {
                side: PairSide::Edge,
                class_index: u32::MAX
            };
            n * (n - 1) / 2
        ];
        let mut unions = [Vec::new(), Vec::new()];

        for side in [PairSide::Edge, PairSide::NonEdge] {
            let side_ix = (side == PairSide::NonEdge) as usize;
            let on_side = |u: usize, v: usize| g.has_edge(u, v) == (side == PairSide::Edge);
            for u in 0..n {
                for v in u + 1..n {
                    if !on_side(u, v) || ids[pair_index(u, v)].class_index != u32::MAX {
                        continue;
                    }
                    // Traversal of the wedge relation starting at {u, v};
                    // neighboring pairs are generated from the shared
                    // endpoint on the fly. A wedge partner of {shared, far}
                    // lies on the same side and joins the far ends the
                    // opposite way, which is one bitset difference per
                    // endpoint.
                    let class_index = unions[side_ix].len() as u32;
                    let id = WedgeClassId { side, class_index };
                    let mut union = VertexSet::empty(n);
                    let mut queue = vec![(u, v)];
                    ids[pair_index(u, v)] = id;
                    while let Some((a, b)) = queue.pop() {
                        union.insert(a);
                        union.insert(b);
                        for (shared, far) in [(a, b), (b, a)] {
                            let candidates = match side {
                                PairSide::Edge => {
                                    let mut c = g.neighbors(shared).difference(g.neighbors(far));
                                    c.remove(far);
                                    c
                                }
                                PairSide::NonEdge => {
                                    g.neighbors(far).difference(g.neighbors(shared))
                                }
                            };
                            for x in candidates.iter() {
                                let ix = pair_index(shared, x);
                                if ids[ix].class_index == u32::MAX {
                                    ids[ix] = id;
                                    queue.push((shared, x));
                                }
                            }
                        }
                    }
                    unions[side_ix].push(union);
                }
            }
        }
        WedgeClasses { n, ids, unions }
    }

    /// The wedge class of a pair of distinct vertices.
    pub fn class_of(&self, v: usize, w: usize) -> WedgeClassId {
        assert!(v != w, "a wedge class needs two distinct vertices");
        self.ids[pair_index(v, w)]
    }

    /// The smallest module of the host graph containing `v` and `w`.
    pub fn spanned_module(&self, v: usize, w: usize) -> VertexSet {
        if v == w {
            return VertexSet::singleton(self.n, v);
        }
        let id = self.class_of(v, w);
        self.unions[(id.side == PairSide::NonEdge) as usize][id.class_index as usize].clone()
    }
}

/// Maps every pair of distinct vertices to its wedge class id.
pub fn wedge_classes(g: &Graph) -> WedgeClasses {
    WedgeClasses::compute(g)
}

/// The smallest module containing `v` and `w`; `{v}` when `v == w`.
///
/// One-shot convenience: when querying many pairs of the same graph, compute
/// [`WedgeClasses`] once instead.
pub fn spanned_module(g: &Graph, v: usize, w: usize) -> VertexSet {
    if v == w {
        return VertexSet::singleton(g.vertex_count(), v);
    }
    WedgeClasses::compute(g).spanned_module(v, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn singletons_and_vertex_set_are_modules() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4), (1, 3)]);
        for v in g.vertices() {
            assert!(is_module(&g, &VertexSet::singleton(5, v)));
        }
        assert!(is_module(&g, &VertexSet::full(5)));
    }

    #[test]
    fn cross_component_pair_is_not_a_module() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert!(!is_module(&g, &VertexSet::from_vertices(4, [0, 2])));
    }

    #[test]
    #[should_panic(expected = "empty set")]
    fn is_module_rejects_empty_set() {
        is_module(&Graph::new(2), &VertexSet::empty(2));
    }

    #[test]
    fn wedge_on_p3_and_triangle() {
        let p3 = Graph::path(3);
        assert!(wedge(&p3, (0, 1), (1, 2)));
        let k3 = Graph::complete(3);
        assert!(!wedge(&k3, (0, 1), (1, 2)));
        assert!(!wedge(&p3, (0, 1), (0, 1)));
    }

    #[test]
    #[should_panic(expected = "not an edge")]
    fn wedge_rejects_non_edges() {
        wedge(&Graph::path(3), (0, 1), (0, 2));
    }

    #[test]
    fn wedge_classes_of_k2() {
        let classes = wedge_classes(&Graph::complete(2));
        assert_eq!(classes.class_of(0, 1).side, PairSide::Edge);
    }

    #[test]
    fn wedge_classes_of_p3() {
        let classes = wedge_classes(&Graph::path(3));
        assert_eq!(classes.class_of(0, 1), classes.class_of(1, 2));
        assert_eq!(classes.class_of(0, 2).side, PairSide::NonEdge);
    }

    #[test]
    fn p4_edges_fall_into_one_class() {
        let classes = wedge_classes(&Graph::path(4));
        assert_eq!(classes.class_of(0, 1), classes.class_of(1, 2));
        assert_eq!(classes.class_of(1, 2), classes.class_of(2, 3));
    }

    #[test]
    fn spanned_module_examples() {
        let g = Graph::path(4);
        assert_eq!(spanned_module(&g, 1, 1), VertexSet::singleton(4, 1));
        assert_eq!(spanned_module(&g, 0, 1), VertexSet::full(4));
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(spanned_module(&two_k2, 0, 2), VertexSet::full(4));
    }

    #[test]
    fn spanned_module_matches_brute_force_on_samples() {
        let graphs = [
            Graph::path(5),
            Graph::cycle(5),
            Graph::from_edges(5, [(0, 3), (1, 2), (1, 3), (1, 4), (2, 3)]),
            Graph::from_edges(6, [(0, 1), (2, 3), (4, 5), (1, 2)]),
        ];
        for g in &graphs {
            let classes = wedge_classes(g);
            for v in g.vertices() {
                for w in g.vertices() {
                    assert_eq!(
                        classes.spanned_module(v, w),
                        oracle::brute_min_module(g, v, w),
                        "disagreement at ({v}, {w}) in {g:?}"
                    );
                }
            }
        }
    }
}
