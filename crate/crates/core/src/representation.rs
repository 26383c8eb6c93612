//! Encoding of ordered graphs as number-pair relations.
//!
//! An ordered graph on `n` vertices is encoded as the set of ordered pairs
//! `(l, l')` over `{1..n}` for each edge `{l, l'}`, plus the single reflexive
//! marker pair `(n, n)` that pins the vertex count. Decoding inverts this
//! exactly, so the encoding doubles as a canonical comparison key.

use crate::graph::Graph;
use thiserror::Error;

/// A graph on `{0..n-1}` whose vertex order is the natural order: vertex `i`
/// has rank `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGraph {
    graph: Graph,
}

impl OrderedGraph {
    pub fn new(graph: Graph) -> Self {
        OrderedGraph { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}

/// A symmetric pair relation over `{1..n}` with exactly one reflexive pair
/// `(n, n)`. Pairs are kept sorted so set equality is slice equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    pairs: Vec<(u32, u32)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepresentationError {
    #[error("no reflexive pair present")]
    NoReflexivePair,
    #[error("more than one reflexive pair present")]
    MultipleReflexivePairs,
    #[error("pair ({0}, {1}) exceeds the vertex count {2}")]
    PairOutOfBounds(u32, u32, u32),
    #[error("pair ({0}, {1}) present without its mirror")]
    Asymmetric(u32, u32),
}

impl Representation {
    /// Builds a representation from raw pairs, sorting and deduplicating.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        Representation { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }
}

/// Encodes an ordered graph; vertex `i` is written as the number `i + 1`.
pub fn encode_representation(k: &OrderedGraph) -> Representation {
    let n = k.vertex_count() as u32;
    let mut pairs = Vec::with_capacity(2 * k.graph().edge_count() + 1);
    for (u, v) in k.graph().edges() {
        let (u, v) = (u as u32 + 1, v as u32 + 1);
        pairs.push((u, v));
        pairs.push((v, u));
    }
    pairs.push((n, n));
    Representation::from_pairs(pairs)
}

/// Decodes a representation back to the ordered graph it encodes.
pub fn decode_representation(r: &Representation) -> Result<OrderedGraph, RepresentationError> {
    let mut reflexive = None;
    for &(a, b) in r.pairs() {
        if a == b && reflexive.replace(a).is_some() {
            return Err(RepresentationError::MultipleReflexivePairs);
        }
    }
    let n = reflexive.ok_or(RepresentationError::NoReflexivePair)?;
    if n == 0 {
        return Err(RepresentationError::PairOutOfBounds(0, 0, 0));
    }
    let mut graph = Graph::new(n as usize);
    for &(a, b) in r.pairs() {
        if a == b {
            continue;
        }
        if a == 0 || b == 0 || a > n || b > n {
            return Err(RepresentationError::PairOutOfBounds(a, b, n));
        }
        if r.pairs().binary_search(&(b, a)).is_err() {
            return Err(RepresentationError::Asymmetric(a, b));
        }
        if a < b {
            graph.add_edge(a as usize - 1, b as usize - 1);
        }
    }
    Ok(OrderedGraph::new(graph))
}
