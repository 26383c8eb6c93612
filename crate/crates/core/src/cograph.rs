//! Cograph recognition, cotrees, and cograph canonization.
//!
//! A cograph is built from single vertices by disjoint unions and joins;
//! equivalently, its modular decomposition tree has no prime inner node.
//! Labeling inner nodes 0 (union) or 1 (join) gives the cotree, a canonical
//! tree representation: two cographs are isomorphic exactly when their
//! cotrees are isomorphic as labeled rooted trees. Canonization therefore
//! reduces to a canonical encoding of the cotree.

use crate::canon::Canon;
use crate::decomposition::{md_tree, MdNodeKind, MdTree};
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a cograph: the vertices {witness:?} induce a prime subgraph")]
pub struct NotCographError {
    /// A prime node of the decomposition tree.
    pub witness: Vec<usize>,
}

fn find_prime_node(tree: &MdTree) -> Option<usize> {
    (0..tree.node_count()).find(|&id| tree.node(id).kind == MdNodeKind::Prime)
}

/// True exactly when the decomposition tree of `g` has no prime inner node.
pub fn is_cograph(g: &Graph) -> bool {
    find_prime_node(&md_tree(g)).is_none()
}

/// The cotree of a cograph: its decomposition tree with inner nodes labeled
/// 0 for disjoint union and 1 for join.
#[derive(Clone, Debug)]
pub struct Cotree {
    tree: MdTree,
}

impl Cotree {
    pub fn tree(&self) -> &MdTree {
        &self.tree
    }

    /// 0 on union nodes, 1 on join nodes, none on leaves.
    pub fn label(&self, id: usize) -> Option<u8> {
        match self.tree.node(id).kind {
            MdNodeKind::Parallel => Some(0),
            MdNodeKind::Series => Some(1),
            MdNodeKind::Leaf => None,
            MdNodeKind::Prime => unreachable!("cotrees have no prime nodes"),
        }
    }

    pub fn to_json(&self) -> String {
        self.tree.to_labeled_json()
    }
}

/// Builds the cotree, or reports a witness prime node if `g` is not a
/// cograph.
pub fn cotree(g: &Graph) -> Result<Cotree, NotCographError> {
    let tree = md_tree(g);
    match find_prime_node(&tree) {
        Some(id) => Err(NotCographError {
            witness: tree.node(id).vertices.to_vec(),
        }),
        None => Ok(Cotree { tree }),
    }
}

/// Canonical text encoding of a cotree node: leaves encode as `L`, inner
/// nodes as their label followed by the sorted child encodings. Isomorphic
/// labeled rooted trees get equal encodings.
fn encode_node(tree: &MdTree, id: usize, encodings: &mut Vec<String>) {
    let node = tree.node(id);
    if node.kind == MdNodeKind::Leaf {
        encodings[id] = "L".to_string();
        return;
    }
    for &child in &node.children {
        encode_node(tree, child, encodings);
    }
    let mut parts: Vec<&str> = node
        .children
        .iter()
        .map(|&c| encodings[c].as_str())
        .collect();
    parts.sort_unstable();
    let label = if node.kind == MdNodeKind::Parallel {
        '0'
    } else {
        '1'
    };
    encodings[id] = format!("{label}({})", parts.join(""));
}

fn walk(tree: &MdTree, id: usize, encodings: &[String], order: &mut Vec<usize>) {
    let node = tree.node(id);
    if node.kind == MdNodeKind::Leaf {
        order.push(node.vertices.min_vertex().expect("leaf vertex"));
        return;
    }
    // Children in encoding order; ties are isomorphic subtrees, so any
    // stable tie break yields the same canon.
    let mut children = node.children.clone();
    children.sort_by(|&a, &b| encodings[a].cmp(&encodings[b]).then(a.cmp(&b)));
    for child in children {
        walk(tree, child, encodings, order);
    }
}

/// Canonizes a cograph via its cotree: vertices are numbered by an in-order
/// walk of the encoding-sorted tree.
pub fn canonize_cograph(g: &Graph) -> Result<Canon, NotCographError> {
    let ct = cotree(g)?;
    let tree = ct.tree();
    let mut encodings = vec![String::new(); tree.node_count()];
    encode_node(tree, tree.root(), &mut encodings);
    let mut order = Vec::with_capacity(g.vertex_count());
    walk(tree, tree.root(), &encodings, &mut order);

    let mut witness = vec![0u32; g.vertex_count()];
    for (rank0, &v) in order.iter().enumerate() {
        witness[v] = rank0 as u32 + 1;
    }
    let relabeled = {
        let perm: Vec<usize> = witness.iter().map(|&r| r as usize - 1).collect();
        g.relabel(&perm)
    };
    Ok(Canon::from_parts(relabeled, witness))
}
