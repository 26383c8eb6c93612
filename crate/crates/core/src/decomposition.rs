//! Modular decomposition: the inclusion order on spanned modules, the
//! per-level decomposition sets, the decomposition tree, and the quotient
//! (modular contraction).
//!
//! For a fixed pivot `v`, the spanned modules containing `v` are ordered by
//! proper inclusion. That order is a strict weak order, so its
//! incomparability classes are linearly ordered and can be numbered; the
//! decomposition set at level `i` is then the union of the spanned modules
//! whose far vertex sits in class `i`. This recovers the recursive
//! component/co-component/maximal-module splitting without ever recursing
//! into induced subgraphs.

use crate::graph::{Graph, VertexSet};
use crate::modules::WedgeClasses;
use serde::Serialize;
use std::collections::HashMap;

/// Outcome of comparing two vertices in the pivot order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakOrderRelation {
    Less,
    Greater,
    Incomparable,
}

/// The incomparability classes of the pivot order, numbered `0..class_count`
/// from the largest spanned modules down to the pivot's own class.
#[derive(Clone, Debug)]
pub struct WeakOrderRank {
    pivot: usize,
    rank: Vec<usize>,
    class_count: usize,
}

impl WeakOrderRank {
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn rank(&self, w: usize) -> usize {
        self.rank[w]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }
}

fn compare_modules(m1: &VertexSet, m2: &VertexSet) -> WeakOrderRelation {
    // w1 sits below w2 exactly when w2's module is properly inside w1's.
    if m2.is_proper_subset(m1) {
        WeakOrderRelation::Less
    } else if m1.is_proper_subset(m2) {
        WeakOrderRelation::Greater
    } else {
        WeakOrderRelation::Incomparable
    }
}

/// Shared state for the decomposition of one graph: the wedge classes are
/// computed once and reused for every pivot.
struct Decomposer<'g> {
    graph: &'g Graph,
    wedges: WedgeClasses,
}

struct PivotOrder {
    ranks: WeakOrderRank,
    /// Spanned module of `(pivot, w)` for every `w`.
    modules: Vec<VertexSet>,
}

impl<'g> Decomposer<'g> {
    fn new(graph: &'g Graph) -> Self {
        Decomposer {
            graph,
            wedges: WedgeClasses::compute(graph),
        }
    }

    fn pivot_order(&self, v: usize) -> PivotOrder {
        let n = self.graph.vertex_count();
        let modules: Vec<VertexSet> = (0..n).map(|w| self.wedges.spanned_module(v, w)).collect();
        let sizes: Vec<usize> = modules.iter().map(|m| m.len()).collect();

        // Proper inclusion forces strictly smaller size, and the theory puts
        // whole incomparability classes strictly between size boundaries, so
        // one pass over the vertices in descending module size groups them:
        // incomparable with the current class representative means same
        // class, properly included means the next class starts here.
        let mut by_size: Vec<usize> = (0..n).collect();
        by_size.sort_unstable_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &w in &by_size {
            match classes.last_mut() {
                Some(class) => match compare_modules(&modules[w], &modules[class[0]]) {
                    WeakOrderRelation::Incomparable => class.push(w),
                    WeakOrderRelation::Greater => classes.push(vec![w]),
                    WeakOrderRelation::Less => panic!(
                        "internal consistency: inclusion against the size order under pivot {v}"
                    ),
                },
                None => classes.push(vec![w]),
            }
        }

        // Verify the grouping is the strict weak order the theory promises.
        // Within a class, the distinct modules must share their common
        // intersection and split disjointly above it (hence pairwise
        // incomparable); across consecutive classes, the lower class must
        // fit strictly inside every module of the class above. A violation
        // would mean the inclusion order is not a strict weak order.
        struct ClassSummary {
            intersection: VertexSet,
            union: VertexSet,
            min_size: usize,
        }
        let summaries: Vec<ClassSummary> = classes
            .iter()
            .map(|class| {
                let mut intersection = modules[class[0]].clone();
                let mut union = modules[class[0]].clone();
                let mut min_size = sizes[class[0]];
                for &w in &class[1..] {
                    intersection.intersect_with(&modules[w]);
                    union.union_with(&modules[w]);
                    min_size = min_size.min(sizes[w]);
                }
                ClassSummary {
                    intersection,
                    union,
                    min_size,
                }
            })
            .collect();
        for (class, summary) in classes.iter().zip(&summaries) {
            let mut distinct: Vec<&VertexSet> = class.iter().map(|&w| &modules[w]).collect();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() > 1 {
                let mut remainder = 0;
                for m in &distinct {
                    let part = m.len() - summary.intersection.len();
                    assert!(
                        part > 0,
                        "internal consistency: comparable modules share a class under pivot {v}"
                    );
                    remainder += part;
                }
                assert_eq!(
                    remainder,
                    summary.union.len() - summary.intersection.len(),
                    "internal consistency: incomparability is not transitive under pivot {v}"
                );
            }
        }
        for pair in summaries.windows(2) {
            assert!(
                pair[1].union.is_subset(&pair[0].intersection)
                    && pair[1].union.len() < pair[0].min_size,
                "internal consistency: classes are not linearly ordered under pivot {v}"
            );
        }

        let class_count = classes.len();
        let mut rank = vec![0usize; n];
        for (i, class) in classes.iter().enumerate() {
            for &w in class {
                rank[w] = i;
            }
        }
        assert_eq!(rank[v], class_count - 1, "pivot class must be the largest");
        assert_eq!(
            classes[class_count - 1],
            vec![v],
            "pivot class must be the singleton {{{v}}}"
        );
        PivotOrder {
            ranks: WeakOrderRank {
                pivot: v,
                rank,
                class_count,
            },
            modules,
        }
    }

    /// The decomposition set at `level` for the pivot: the union of the
    /// pivot's spanned modules into class `level`, or the pivot alone once
    /// the levels are exhausted.
    fn level_set(&self, order: &PivotOrder, level: usize) -> VertexSet {
        let v = order.ranks.pivot;
        let mut out = VertexSet::singleton(self.graph.vertex_count(), v);
        if level >= order.ranks.class_count {
            return out;
        }
        for w in 0..self.graph.vertex_count() {
            if order.ranks.rank[w] == level {
                out.union_with(&order.modules[w]);
            }
        }
        out
    }

    /// All the pivot's decomposition sets at once: entry `i` is the level-`i`
    /// set, down to the singleton at the last level.
    fn level_sets(&self, order: &PivotOrder) -> Vec<VertexSet> {
        let v = order.ranks.pivot;
        let n = self.graph.vertex_count();
        let mut out: Vec<VertexSet> = (0..order.ranks.class_count)
            .map(|_| VertexSet::singleton(n, v))
            .collect();
        for w in 0..n {
            out[order.ranks.rank[w]].union_with(&order.modules[w]);
        }
        out
    }
}

/// Compares `w1` and `w2` in the strict weak order attached to pivot `v`.
pub fn weak_order_compare(g: &Graph, v: usize, w1: usize, w2: usize) -> WeakOrderRelation {
    let wedges = WedgeClasses::compute(g);
    compare_modules(&wedges.spanned_module(v, w1), &wedges.spanned_module(v, w2))
}

/// Ranks all vertices in the strict weak order attached to pivot `v`.
pub fn weak_order_ranks(g: &Graph, v: usize) -> WeakOrderRank {
    Decomposer::new(g).pivot_order(v).ranks
}

/// The decomposition set of pivot `v` at `level`: the whole vertex set at
/// level 0, shrinking down to `{v}`. Panics if `level > n`.
pub fn decomposition_set(g: &Graph, level: usize, v: usize) -> VertexSet {
    assert!(
        level <= g.vertex_count(),
        "level {level} out of range 0..={}",
        g.vertex_count()
    );
    let decomposer = Decomposer::new(g);
    let order = decomposer.pivot_order(v);
    decomposer.level_set(&order, level)
}

/// The canonical proper module containing `v`: the connected component of
/// `v` if the graph is disconnected, the co-component if the complement is
/// disconnected, the maximal proper module otherwise; `{v}` on one vertex.
pub fn maximal_proper_module_of(g: &Graph, v: usize) -> VertexSet {
    decomposition_set(g, 1, v)
}

/// Node kind in the modular decomposition tree. Internal nodes split by the
/// connectivity of the induced subgraph: parallel when it is disconnected,
/// series when its complement is, prime when both are connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MdNodeKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

#[derive(Clone, Debug)]
pub struct MdNode {
    pub vertices: VertexSet,
    pub kind: MdNodeKind,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// The modular decomposition tree: the distinct decomposition sets, ordered
/// by inclusion. The root is the vertex set, the leaves are the singletons,
/// and the children of every node partition it.
#[derive(Clone, Debug)]
pub struct MdTree {
    nodes: Vec<MdNode>,
    root: usize,
}

impl MdTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, id: usize) -> &MdNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[MdNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Node ids with every node appearing after all of its children.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                out.push(id);
            } else {
                stack.push((id, true));
                for &child in &self.nodes[id].children {
                    stack.push((child, false));
                }
            }
        }
        out
    }

    fn export(&self, id: usize) -> ExportNode {
        let node = &self.nodes[id];
        ExportNode {
            id,
            kind: node.kind,
            vertices: node.vertices.to_vec(),
            label: match node.kind {
                MdNodeKind::Parallel => Some(0),
                MdNodeKind::Series => Some(1),
                _ => None,
            },
            children: node.children.iter().map(|&c| self.export(c)).collect(),
        }
    }

    /// JSON export with deterministic child order (children are sorted by
    /// their minimum vertex).
    pub fn to_json(&self) -> String {
        let mut root = self.export(self.root);
        strip_labels(&mut root);
        serde_json::to_string(&root).expect("tree export cannot fail")
    }

    /// JSON export that keeps the 0/1 union/join labels on inner nodes;
    /// meaningful for trees without prime nodes.
    pub fn to_labeled_json(&self) -> String {
        serde_json::to_string(&self.export(self.root)).expect("tree export cannot fail")
    }
}

fn strip_labels(node: &mut ExportNode) {
    node.label = None;
    for child in &mut node.children {
        strip_labels(child);
    }
}

/// Connectivity of the subgraph induced by `set` (or of its complement),
/// without materializing the subgraph.
fn connected_within(g: &Graph, set: &VertexSet, complemented: bool) -> bool {
    let start = set.min_vertex().expect("non-empty module");
    let mut reached = VertexSet::singleton(set.capacity(), start);
    let mut frontier = vec![start];
    while let Some(u) = frontier.pop() {
        let mut fresh = if complemented {
            let mut non_neighbors = set.difference(g.neighbors(u));
            non_neighbors.remove(u);
            non_neighbors
        } else {
            g.neighbors(u).intersection(set)
        };
        fresh = fresh.difference(&reached);
        for w in fresh.iter() {
            reached.insert(w);
            frontier.push(w);
        }
    }
    reached == *set
}

#[derive(Serialize)]
struct ExportNode {
    id: usize,
    kind: MdNodeKind,
    vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<u8>,
    children: Vec<ExportNode>,
}

/// Builds the modular decomposition tree of `g`.
pub fn md_tree(g: &Graph) -> MdTree {
    let n = g.vertex_count();
    let decomposer = Decomposer::new(g);

    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    let mut sets: Vec<VertexSet> = Vec::new();
    let mut parent_of: Vec<Option<usize>> = Vec::new();
    let mut intern =
        |set: VertexSet, sets: &mut Vec<VertexSet>, parents: &mut Vec<Option<usize>>| {
            *index.entry(set.clone()).or_insert_with(|| {
                sets.push(set);
                parents.push(None);
                sets.len() - 1
            })
        };

    for v in 0..n {
        let order = decomposer.pivot_order(v);
        let mut levels = decomposer.level_sets(&order).into_iter();
        let mut previous = intern(levels.next().expect("level 0"), &mut sets, &mut parent_of);
        for set in levels {
            let id = intern(set, &mut sets, &mut parent_of);
            parent_of[id] = Some(previous);
            previous = id;
        }
    }

    let mut nodes: Vec<MdNode> = sets
        .iter()
        .map(|set| {
            let kind = if set.len() == 1 {
                MdNodeKind::Leaf
            } else if !connected_within(g, set, false) {
                MdNodeKind::Parallel
            } else if !connected_within(g, set, true) {
                MdNodeKind::Series
            } else {
                MdNodeKind::Prime
            };
            MdNode {
                vertices: set.clone(),
                kind,
                parent: None,
                children: Vec::new(),
            }
        })
        .collect();

    let mut root = None;
    for (id, parent) in parent_of.iter().enumerate() {
        nodes[id].parent = *parent;
        match parent {
            Some(p) => nodes[*p].children.push(id),
            None => {
                assert!(root.is_none(), "decomposition sets must form a single tree");
                root = Some(id);
            }
        }
    }
    let root = root.expect("a non-empty graph has a root module");
    for node in &mut nodes {
        node.children.sort_by_key(|&c| sets[c].min_vertex());
        node.children.dedup();
    }
    MdTree { nodes, root }
}

/// The modular contraction: one vertex per canonical proper module, adjacent
/// exactly when the modules are fully joined. `class_map[v]` is the class of
/// vertex `v`; classes are ordered by their minimum vertex.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: Graph,
    pub classes: Vec<VertexSet>,
    class_map: Vec<usize>,
}

impl Quotient {
    pub fn class_of(&self, v: usize) -> usize {
        self.class_map[v]
    }
}

/// Contracts every canonical proper module of `g` to a single vertex.
pub fn quotient(g: &Graph) -> Quotient {
    let n = g.vertex_count();
    let decomposer = Decomposer::new(g);
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut class_map = vec![usize::MAX; n];
    for v in 0..n {
        if class_map[v] != usize::MAX {
            continue;
        }
        let order = decomposer.pivot_order(v);
        let class = decomposer.level_set(&order, 1);
        for w in class.iter() {
            class_map[w] = classes.len();
        }
        classes.push(class);
    }
    let mut graph = Graph::new(classes.len());
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let (u, w) = (
                classes[i].min_vertex().unwrap(),
                classes[j].min_vertex().unwrap(),
            );
            if g.has_edge(u, w) {
                graph.add_edge(i, j);
            }
        }
    }
    Quotient {
        graph,
        classes,
        class_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::is_module;
    use crate::oracle;

    fn two_k2() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)])
    }

    #[test]
    fn maximal_proper_module_cases() {
        assert_eq!(
            maximal_proper_module_of(&Graph::new(1), 0),
            VertexSet::singleton(1, 0)
        );
        for v in 0..3 {
            assert_eq!(
                maximal_proper_module_of(&Graph::complete(3), v),
                VertexSet::singleton(3, v)
            );
        }
        for v in 0..4 {
            assert_eq!(
                maximal_proper_module_of(&Graph::path(4), v),
                VertexSet::singleton(4, v)
            );
        }
        assert_eq!(
            maximal_proper_module_of(&two_k2(), 0),
            VertexSet::from_vertices(4, [0, 1])
        );
    }

    #[test]
    fn weak_order_compare_examples() {
        let g = two_k2();
        // the singleton module of the pivot is the inclusion-minimum, so the
        // pivot is the largest element of its order
        assert_eq!(weak_order_compare(&g, 0, 0, 1), WeakOrderRelation::Greater);
        assert_eq!(
            weak_order_compare(&g, 0, 1, 1),
            WeakOrderRelation::Incomparable
        );
        assert_eq!(weak_order_compare(&g, 0, 2, 1), WeakOrderRelation::Less);
    }

    #[test]
    fn ranks_on_2k2() {
        let ranks = weak_order_ranks(&two_k2(), 0);
        assert_eq!(ranks.class_count(), 3);
        assert_eq!(ranks.rank(2), 0);
        assert_eq!(ranks.rank(3), 0);
        assert_eq!(ranks.rank(1), 1);
        assert_eq!(ranks.rank(0), 2);
    }

    #[test]
    fn ranks_on_k1() {
        let ranks = weak_order_ranks(&Graph::new(1), 0);
        assert_eq!(ranks.class_count(), 1);
        assert_eq!(ranks.rank(0), 0);
    }

    #[test]
    fn decomposition_set_boundaries() {
        let g = two_k2();
        for v in 0..4 {
            assert_eq!(decomposition_set(&g, 0, v), VertexSet::full(4));
            assert_eq!(decomposition_set(&g, 4, v), VertexSet::singleton(4, v));
        }
        assert_eq!(
            decomposition_set(&g, 1, 0),
            VertexSet::from_vertices(4, [0, 1])
        );
        assert_eq!(decomposition_set(&g, 2, 0), VertexSet::singleton(4, 0));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn decomposition_set_rejects_bad_level() {
        decomposition_set(&two_k2(), 5, 0);
    }

    #[test]
    fn md_tree_of_k1_is_a_leaf() {
        let tree = md_tree(&Graph::new(1));
        assert_eq!(tree.node_count(), 1);
        assert_eq!(tree.node(tree.root()).kind, MdNodeKind::Leaf);
    }

    #[test]
    fn md_tree_of_2k2() {
        let tree = md_tree(&two_k2());
        let root = tree.node(tree.root());
        assert_eq!(root.kind, MdNodeKind::Parallel);
        assert_eq!(root.children.len(), 2);
        for &c in &root.children {
            let child = tree.node(c);
            assert_eq!(child.kind, MdNodeKind::Series);
            assert_eq!(child.children.len(), 2);
        }
        assert_eq!(tree.node_count(), 7);
    }

    #[test]
    fn md_tree_of_p4_is_prime() {
        let tree = md_tree(&Graph::path(4));
        let root = tree.node(tree.root());
        assert_eq!(root.kind, MdNodeKind::Prime);
        assert_eq!(root.children.len(), 4);
        assert!(root
            .children
            .iter()
            .all(|&c| tree.node(c).kind == MdNodeKind::Leaf));
    }

    #[test]
    fn every_tree_node_is_a_module() {
        for g in [
            two_k2(),
            Graph::path(5),
            Graph::cycle(5),
            Graph::complete(4),
        ] {
            let tree = md_tree(&g);
            for node in tree.nodes() {
                assert!(is_module(&g, &node.vertices));
            }
        }
    }

    #[test]
    fn decomposition_matches_recursive_route_on_samples() {
        for g in [
            two_k2(),
            Graph::path(5),
            Graph::cycle(6),
            Graph::complete(4).join(&Graph::new(1)),
        ] {
            let n = g.vertex_count();
            for v in 0..n {
                let chain = oracle::brute_decomposition_chain(&g, v);
                for (i, expected) in chain.iter().enumerate() {
                    assert_eq!(
                        &decomposition_set(&g, i, v),
                        expected,
                        "level {i}, pivot {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(&two_k2());
        assert_eq!(q.graph.vertex_count(), 2);
        assert!(q.graph.is_edgeless());

        let q = quotient(&Graph::complete(3));
        assert_eq!(q.graph, Graph::complete(3));

        let q = quotient(&Graph::path(4));
        assert_eq!(q.graph, Graph::path(4));
        assert_eq!(q.class_of(2), 2);
    }

    #[test]
    fn json_export_is_deterministic() {
        let tree = md_tree(&two_k2());
        let text = tree.to_json();
        assert_eq!(text, md_tree(&two_k2()).to_json());
        assert!(text.contains("\"kind\":\"parallel\""));
    }
}
