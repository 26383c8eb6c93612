//! Canonization by recursion over the modular decomposition tree.
//!
//! Every tree node is canonized from its children: the node's quotient is
//! turned into an LO-colored graph by coloring each class with the encoded
//! canon of the child below it, the colored quotient is ordered by a
//! canonizer for its shape (complete/edgeless by color order, prime by
//! realizer order), and the ordered quotient is expanded back into an
//! ordered copy of the node by replacing each class with the graph its
//! color encodes. Two graphs in the supported class (all cographs and all
//! permutation graphs, and more generally every graph whose prime quotients
//! have realizers) get byte-identical canons exactly when they are
//! isomorphic.

use crate::colored::{ColorPairs, LoColoredGraph};
use crate::decomposition::{md_tree, MdNodeKind};
use crate::graph::{Graph, VertexSet};
use crate::realizer::find_realizers;
use crate::representation::{encode_representation, OrderedGraph, Representation};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("underlying graph is neither complete nor edgeless")]
    NotCompleteOrEdgeless,
    #[error("prime graph has no realizer, so it is not a permutation graph")]
    NotPermutationPrime,
    #[error("unsupported graph class: the prime quotient over {0:?} has no realizer")]
    UnsupportedClass(Vec<usize>),
    #[error("malformed color relation: {0}")]
    MalformedColor(String),
}

/// An ordered copy of a graph on ranks `1..=n` plus its encoded form and the
/// witness bijection from original vertices to ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canon {
    ordered: OrderedGraph,
    representation: Representation,
    witness: Vec<u32>,
}

impl Canon {
    pub(crate) fn from_parts(graph: Graph, witness: Vec<u32>) -> Self {
        let ordered = OrderedGraph::new(graph);
        let representation = encode_representation(&ordered);
        Canon {
            ordered,
            representation,
            witness,
        }
    }

    pub fn ordered_graph(&self) -> &OrderedGraph {
        &self.ordered
    }

    pub fn representation(&self) -> &Representation {
        &self.representation
    }

    /// `witness()[v]` is the 1-based rank of original vertex `v`.
    pub fn witness(&self) -> &[u32] {
        &self.witness
    }

    pub fn vertex_count(&self) -> usize {
        self.ordered.vertex_count()
    }

    /// Stable text form: the vertex count, then one sorted `l1 l2` line per
    /// representation pair.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for (a, b) in self.representation.pairs() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

/// An LO-colored graph whose whole universe is ordered: the vertices by
/// `vertex_order`, followed by the basic color elements in their own order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedLoColoredGraph {
    pub colored: LoColoredGraph,
    pub vertex_order: Vec<usize>,
}

/// Replaces every color by the rank of that color among the used colors,
/// encoded as a reflexive singleton over a fresh element set. Color-equality
/// classes and the relative order of distinct colors are preserved.
pub fn compress_colors(h: &LoColoredGraph) -> LoColoredGraph {
    let natural = h.natural_colors();
    let used: Vec<&ColorPairs> = {
        let mut distinct: Vec<&ColorPairs> = natural.iter().collect();
        distinct.sort();
        distinct.dedup();
        distinct
    };
    let rank_of = |c: &ColorPairs| used.binary_search(&c).expect("color is used") as u32;
    let colors = natural
        .iter()
        .map(|c| ColorPairs::from([(rank_of(c), rank_of(c))]))
        .collect();
    let elements = (0..used.len() as u32).collect();
    LoColoredGraph::new(h.graph().clone(), elements, colors)
}

fn encoding_key(
    g: &Graph,
    natural: &[ColorPairs],
    order: &[usize],
) -> (Vec<(u32, u32)>, Vec<ColorPairs>) {
    let n = g.vertex_count();
    let mut pos = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i as u32 + 1;
    }
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    let colors = order.iter().map(|&v| natural[v].clone()).collect();
    (edges, colors)
}

/// Orders a complete or edgeless LO-colored graph by the lexicographic order
/// of the natural colors. Tied vertices are interchangeable, so any tie
/// break yields the same encoding.
pub fn canon_complete_or_edgeless(h: &LoColoredGraph) -> Result<OrderedLoColoredGraph, CanonError> {
    if !h.graph().is_complete() && !h.graph().is_edgeless() {
        return Err(CanonError::NotCompleteOrEdgeless);
    }
    let natural = h.natural_colors();
    let mut order: Vec<usize> = h.graph().vertices().collect();
    order.sort_by(|&a, &b| natural[a].cmp(&natural[b]).then(a.cmp(&b)));
    Ok(OrderedLoColoredGraph {
        colored: h.clone(),
        vertex_order: order,
    })
}

/// Orders a prime LO-colored permutation graph: every realizer of the
/// underlying graph proposes its first order as a candidate, and the
/// lexicographically least encoded structure wins. The candidate set comes
/// from the uncolored graph; the colors only enter the tie-break encoding,
/// compressed to their ranks first.
pub fn canon_prime_colored(h: &LoColoredGraph) -> Result<OrderedLoColoredGraph, CanonError> {
    let realizers = find_realizers(h.graph());
    if realizers.is_empty() {
        return Err(CanonError::NotPermutationPrime);
    }
    let compressed = compress_colors(h);
    let compressed_natural = compressed.natural_colors();
    let best = realizers
        .into_iter()
        .map(|r| {
            let key = encoding_key(h.graph(), &compressed_natural, &r.order1);
            (key, r.order1)
        })
        .min()
        .expect("at least one realizer");
    Ok(OrderedLoColoredGraph {
        colored: h.clone(),
        vertex_order: best.1,
    })
}

/// The global number of the `inner`-th vertex (1-based) inside the block at
/// `position`, once all blocks are laid out in order: `inner` plus the sizes
/// of all earlier blocks. Panics if `inner` is outside the block.
pub fn nb(block_sizes: &[u32], position: usize, inner: u32) -> u32 {
    let size = block_sizes[position];
    assert!(
        inner >= 1 && inner <= size,
        "inner index {inner} out of range 1..={size} for block {position}"
    );
    inner + block_sizes[..position].iter().sum::<u32>()
}

/// The expansion of an ordered colored quotient: block sizes in order, and
/// the edge set of the expanded graph on `{1..=total}`.
#[derive(Debug)]
pub struct Expansion {
    /// Vertex counts encoded by the colors, in `vertex_order`.
    pub block_sizes: Vec<u32>,
    /// Edges of the expanded graph, as sorted 1-based pairs `(a, b)`, `a < b`.
    pub edges: Vec<(u32, u32)>,
}

/// Expands an ordered colored quotient into the edge set of the graph it
/// encodes: adjacent blocks are fully joined, and each block internally
/// receives the edges decoded from its color.
pub fn expand(k: &OrderedLoColoredGraph) -> Result<Expansion, CanonError> {
    let natural = k.colored.natural_colors();
    let order = &k.vertex_order;
    let mut block_sizes = Vec::with_capacity(order.len());
    for &w in order {
        let mut reflexive = natural[w].iter().filter(|(a, b)| a == b);
        let size = match (reflexive.next(), reflexive.next()) {
            (Some(&(s, _)), None) => s,
            (None, _) => {
                return Err(CanonError::MalformedColor(format!(
                    "color of quotient vertex {w} has no reflexive marker"
                )))
            }
            (Some(_), Some(_)) => {
                return Err(CanonError::MalformedColor(format!(
                    "color of quotient vertex {w} has several reflexive markers"
                )))
            }
        };
        if size == 0 {
            return Err(CanonError::MalformedColor(format!(
                "color of quotient vertex {w} encodes an empty graph"
            )));
        }
        block_sizes.push(size);
    }

    let mut edges = Vec::new();
    // Cross-block edges: blocks of adjacent quotient vertices are fully
    // joined. These pairs come out exactly once each.
    for p1 in 0..order.len() {
        for p2 in p1 + 1..order.len() {
            if !k.colored.graph().has_edge(order[p1], order[p2]) {
                continue;
            }
            for n1 in 1..=block_sizes[p1] {
                for n2 in 1..=block_sizes[p2] {
                    let (a, b) = (nb(&block_sizes, p1, n1), nb(&block_sizes, p2, n2));
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    // Intra-block edges: decode each color as a representation. A color
    // carries both orientations of a pair, hence the dedup below.
    for (position, &w) in order.iter().enumerate() {
        for &(n1, n2) in &natural[w] {
            if n1 == n2 {
                continue;
            }
            let size = block_sizes[position];
            if n1 == 0 || n2 == 0 || n1 > size || n2 > size {
                return Err(CanonError::MalformedColor(format!(
                    "color pair ({n1}, {n2}) of quotient vertex {w} exceeds its size {size}"
                )));
            }
            let (a, b) = (
                nb(&block_sizes, position, n1),
                nb(&block_sizes, position, n2),
            );
            edges.push((a.min(b), a.max(b)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Expansion { block_sizes, edges })
}

/// Canonizes a graph by recursion over its modular decomposition tree.
///
/// Supported inputs are the graphs whose prime quotients are permutation
/// graphs; this covers all cographs (which have no prime quotients) and all
/// permutation graphs. Anything else fails with `UnsupportedClass`.
pub fn canonize(g: &Graph) -> Result<Canon, CanonError> {
    let n = g.vertex_count();
    let tree = md_tree(g);
    let mut canons: Vec<Option<Canon>> = vec![None; tree.node_count()];

    for id in tree.post_order() {
        let node = tree.node(id);
        let canon = if node.kind == MdNodeKind::Leaf {
            let v = node.vertices.min_vertex().expect("leaf has a vertex");
            let mut witness = vec![0u32; n];
            witness[v] = 1;
            Canon::from_parts(Graph::new(1), witness)
        } else {
            // Color the quotient classes with the encoded child canons.
            let children = &node.children;
            let size = node.vertices.len();
            let mut quotient_graph = Graph::new(children.len());
            let reps: Vec<usize> = children
                .iter()
                .map(|&c| tree.node(c).vertices.min_vertex().unwrap())
                .collect();
            for i in 0..children.len() {
                for j in i + 1..children.len() {
                    if g.has_edge(reps[i], reps[j]) {
                        quotient_graph.add_edge(i, j);
                    }
                }
            }
            let elements = (0..=size as u32).collect();
            let colors = children
                .iter()
                .map(|&c| {
                    let rep = canons[c].as_ref().expect("children are canonized first");
                    rep.representation()
                        .pairs()
                        .iter()
                        .copied()
                        .collect::<ColorPairs>()
                })
                .collect();
            let colored = LoColoredGraph::new(quotient_graph, elements, colors);

            let ordered = match node.kind {
                MdNodeKind::Parallel | MdNodeKind::Series => {
                    canon_complete_or_edgeless(&colored).expect("quotient shape matches node kind")
                }
                MdNodeKind::Prime => canon_prime_colored(&colored).map_err(|e| match e {
                    CanonError::NotPermutationPrime => {
                        CanonError::UnsupportedClass(node.vertices.to_vec())
                    }
                    other => other,
                })?,
                MdNodeKind::Leaf => unreachable!(),
            };

            let expansion = expand(&ordered)?;
            let mut witness = vec![0u32; n];
            for (position, &child_ix) in ordered.vertex_order.iter().enumerate() {
                let child = children[child_ix];
                let child_canon = canons[child].as_ref().unwrap();
                for v in tree.node(child).vertices.iter() {
                    witness[v] = nb(&expansion.block_sizes, position, child_canon.witness()[v]);
                }
            }
            let graph = Graph::from_edges(
                size,
                expansion
                    .edges
                    .iter()
                    .map(|&(a, b)| (a as usize - 1, b as usize - 1)),
            );
            verify_ordered_copy(g, &node.vertices, &witness, &graph);
            Canon::from_parts(graph, witness)
        };
        canons[id] = Some(canon);
    }

    Ok(canons[tree.root()].take().expect("root is canonized last"))
}

/// Checks edge-by-edge that `witness` maps the subgraph induced by `module`
/// onto `canon_graph`. A failure would mean the expansion produced something
/// that is not an ordered copy, which must never happen.
fn verify_ordered_copy(g: &Graph, module: &VertexSet, witness: &[u32], canon_graph: &Graph) {
    let members = module.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let mapped = canon_graph.has_edge(witness[u] as usize - 1, witness[v] as usize - 1);
            assert_eq!(
                g.has_edge(u, v),
                mapped,
                "canon witness is not an isomorphism at ({u}, {v})"
            );
        }
    }
}

/// Decides isomorphism within the supported class by comparing canonical
/// representations.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, CanonError> {
    Ok(canonize(g1)?.representation() == canonize(g2)?.representation())
}
