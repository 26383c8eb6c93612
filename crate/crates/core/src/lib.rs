//! Graph canonization via modular decomposition.
//!
//! This crate computes the modular decomposition of a graph from first
//! principles — modules spanned by vertex pairs are read off wedge classes,
//! and the decomposition levels fall out of the inclusion order on those
//! spanned modules — and uses the decomposition tree to canonize graphs:
//! cographs through their cotrees, and permutation graphs (or any graph
//! whose prime quotients are permutation graphs) through an ordered-quotient
//! recursion driven by realizers.
//!
//! The main entry points:
//!
//! * [`decomposition::md_tree`] — the modular decomposition tree,
//! * [`decomposition::quotient`] — the modular contraction,
//! * [`cograph::is_cograph`] / [`cograph::canonize_cograph`],
//! * [`realizer::find_realizers`] — all realizers of a prime graph,
//! * [`canon::canonize`] / [`canon::isomorphic`] — canonical forms and
//!   isomorphism tests.
//!
//! Everything is exact and deliberately polynomial-time rather than
//! linear-time; the [`oracle`] module provides independent brute-force
//! implementations used to certify the algorithms on small instances.
//!
//! All values are immutable after construction and safe to share across
//! threads.

pub mod canon;
pub mod cograph;
pub mod colored;
pub mod decomposition;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod modules;
pub mod oracle;
pub mod realizer;
pub mod representation;

pub use canon::{
    canon_complete_or_edgeless, canon_prime_colored, canonize, compress_colors, expand, isomorphic,
    nb, Canon, CanonError, OrderedLoColoredGraph,
};
pub use cograph::{canonize_cograph, cotree, is_cograph, Cotree, NotCographError};
pub use colored::{ColorPairs, LoColoredGraph};
pub use decomposition::{
    decomposition_set, maximal_proper_module_of, md_tree, quotient, weak_order_compare,
    weak_order_ranks, MdNode, MdNodeKind, MdTree, Quotient, WeakOrderRank, WeakOrderRelation,
};
pub use formats::{
    parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6, FormatError, ParsedGraph,
};
pub use graph::{Graph, InducedSubgraph, VertexSet};
pub use modules::{
    is_module, spanned_module, wedge, wedge_classes, PairSide, WedgeClassId, WedgeClasses,
};
pub use realizer::{
    check_realizer, closure_under_e, find_realizers, realizer_fixpoint, transitive_pair_closure,
    Realizer, Relation, RelationPair,
};
pub use representation::{
    decode_representation, encode_representation, OrderedGraph, Representation, RepresentationError,
};
