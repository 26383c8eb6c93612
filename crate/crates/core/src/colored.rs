//! Graphs whose vertices are colored with binary relations over a linearly
//! ordered set of basic color elements.

use crate::graph::Graph;
use std::collections::BTreeSet;

/// A color: a binary relation over basic color elements, stored as a sorted
/// pair set so colors compare lexicographically.
pub type ColorPairs = BTreeSet<(u32, u32)>;

/// A graph together with a non-empty, linearly ordered set of basic color
/// elements (disjoint from the vertices by construction: elements live in
/// their own id space) and one color per vertex.
///
/// The order on the elements is their position in `elements`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoColoredGraph {
    graph: Graph,
    elements: Vec<u32>,
    colors: Vec<ColorPairs>,
}

impl LoColoredGraph {
    /// Panics if `elements` is empty or repeats an id, if `colors` does not
    /// match the vertex count, or if a color mentions an unknown element.
    pub fn new(graph: Graph, elements: Vec<u32>, colors: Vec<ColorPairs>) -> Self {
        assert!(
            !elements.is_empty(),
            "basic color element set must be non-empty"
        );
        let distinct: BTreeSet<_> = elements.iter().collect();
        assert_eq!(
            distinct.len(),
            elements.len(),
            "basic color elements must be distinct"
        );
        assert_eq!(colors.len(), graph.vertex_count(), "one color per vertex");
        for color in &colors {
            for &(a, b) in color {
                assert!(
                    distinct.contains(&a) && distinct.contains(&b),
                    "color pair ({a}, {b}) uses an unknown basic element"
                );
            }
        }
        LoColoredGraph {
            graph,
            elements,
            colors,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn colors(&self) -> &[ColorPairs] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> &ColorPairs {
        &self.colors[v]
    }

    /// The natural color of every vertex: each basic element replaced by its
    /// rank in the element order.
    pub fn natural_colors(&self) -> Vec<ColorPairs> {
        let rank: std::collections::HashMap<u32, u32> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &d)| (d, i as u32))
            .collect();
        self.colors
            .iter()
            .map(|color| color.iter().map(|&(a, b)| (rank[&a], rank[&b])).collect())
            .collect()
    }
}
