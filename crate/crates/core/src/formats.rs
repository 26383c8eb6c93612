//! Text formats for graphs: the `n m` edge-list format and graph6.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("line {line}: expected an edge `u v`, got {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop {vertex} {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("edge count mismatch: header says {expected}, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("invalid graph6 data: {0}")]
    BadGraph6(String),
    #[error("graph6 supports at most 258047 vertices here, got {0}")]
    Graph6TooLarge(usize),
}

/// A parsed graph plus the number of duplicate edge lines that were dropped.
#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with 0-based vertex ids. Duplicate edges are deduplicated and
/// counted so callers can warn about them.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| FormatError::MalformedHeader("empty input".into()))?;
    let mut fields = header.split_whitespace();
    let n: usize = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::MalformedHeader(header.into()))?;
    let m: usize = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::MalformedHeader(header.into()))?;
    if fields.next().is_some() || n == 0 {
        return Err(FormatError::MalformedHeader(header.into()));
    }

    let mut graph = Graph::new(n);
    let mut duplicate_edges = 0;
    let mut found = 0;
    for (idx, line) in lines {
        let line_no = idx + 1;
        let mut fields = line.split_whitespace();
        let (u, v) = match (
            fields.next().and_then(|t| t.parse::<usize>().ok()),
            fields.next().and_then(|t| t.parse::<usize>().ok()),
            fields.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(FormatError::MalformedEdge {
                    line: line_no,
                    text: line.into(),
                })
            }
        };
        for w in [u, v] {
            if w >= n {
                return Err(FormatError::VertexOutOfRange {
                    line: line_no,
                    vertex: w,
                    n,
                });
            }
        }
        if u == v {
            return Err(FormatError::SelfLoop {
                line: line_no,
                vertex: u,
            });
        }
        found += 1;
        if graph.has_edge(u, v) {
            duplicate_edges += 1;
        } else {
            graph.add_edge(u, v);
        }
    }
    if found != m {
        return Err(FormatError::EdgeCountMismatch { expected: m, found });
    }
    Ok(ParsedGraph {
        graph,
        duplicate_edges,
    })
}

/// Canonical edge-list text: header, then edges sorted with `u < v`.
pub fn serialize_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes a graph in the standard graph6 ASCII format.
pub fn serialize_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    } else {
        return Err(FormatError::Graph6TooLarge(n));
    }
    // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes a single graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::BadGraph6("empty input".into()));
    }
    let sixbit = |b: u8| -> Result<usize, FormatError> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(FormatError::BadGraph6(format!("byte {b} out of range")))
        }
    };
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(FormatError::BadGraph6(
                "8-byte vertex counts not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(FormatError::BadGraph6("truncated vertex count".into()));
        }
        let n = sixbit(bytes[1])? << 12 | sixbit(bytes[2])? << 6 | sixbit(bytes[3])?;
        (n, 4)
    } else {
        (sixbit(bytes[0])?, 1)
    };
    if n == 0 {
        return Err(FormatError::BadGraph6("zero vertices".into()));
    }
    let bits_needed = n * (n - 1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos != bytes_needed {
        return Err(FormatError::BadGraph6(format!(
            "expected {bytes_needed} data bytes, got {}",
            bytes.len() - pos
        )));
    }
    let mut graph = Graph::new(n);
    let mut acc = 0usize;
    let mut avail = 0;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                acc = sixbit(bytes[pos])?;
                pos += 1;
                avail = 6;
            }
            avail -= 1;
            if acc >> avail & 1 == 1 {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialize_k1() {
        assert_eq!(serialize_edge_list(&Graph::new(1)), "1 0\n");
    }

    #[test]
    fn parse_p4() {
        let parsed = parse_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(parsed.graph, Graph::path(4));
        assert_eq!(parsed.duplicate_edges, 0);
    }

    #[test]
    fn parse_counts_duplicates() {
        let parsed = parse_edge_list("3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(parsed.duplicate_edges, 1);
        assert_eq!(parsed.graph.edge_count(), 2);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_edge_list("x y\n"),
            Err(FormatError::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 5\n"),
            Err(FormatError::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n1 1\n"),
            Err(FormatError::SelfLoop { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(FormatError::EdgeCountMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, [(0, 4), (1, 2), (2, 3)]);
        let text = serialize_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap().graph, g);
        assert_eq!(
            serialize_edge_list(&parse_edge_list(&text).unwrap().graph),
            text
        );
    }

    #[test]
    fn graph6_known_value() {
        // 5-vertex graph with edges 02, 04, 13, 34 encodes as "DQc" (petgraph
        // agrees on this value).
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(serialize_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_wide_count() {
        let g = Graph::path(70);
        let text = serialize_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}
