//! Text formats. Files use 1-based vertex ids; in memory ids are 0-based.
//!
//! * `.gr`: `p tw n m`, then `m` lines `u v`.
//! * `.td`: `s td N w n` with `w` the largest bag size, `N` lines
//!   `b i v1 v2 ...`, then one line `i j` per tree edge.
//! * ordering: one vertex id per line.
//! * coordinates: one line `id x y z` per vertex.
//!
//! Lines starting with `c` and blank lines are ignored everywhere. Writers
//! rename the vertices of a graph to `1..n` in increasing id order, and write
//! decompositions, orderings and coordinates under the same renaming.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;
use widthforge::special::Coord;
use widthforge::{Bag, Graph, LinearOrdering, PathDecomposition, TreeDecomposition, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed line {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: vertex id {id} outside 1..={n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at {u}")]
    SelfLoop { line: usize, u: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: bag {id} outside 1..={count} or repeated")]
    BadBagId { line: usize, id: usize, count: usize },
    #[error("bag {0} is missing")]
    MissingBag(usize),
    #[error("header announces bag size {expected}, largest bag has {found}")]
    BagSize { expected: usize, found: usize },
    #[error("decomposition is over {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("line {line}: vertex {id} listed twice")]
    RepeatedVertex { line: usize, id: usize },
    #[error("tree decomposition is not a path")]
    NotAPath,
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn numbers(line: usize, text: &str, fields: &[&str]) -> Result<Vec<usize>, FormatError> {
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| FormatError::MalformedLine { line, text: text.to_string() }))
        .collect()
}

fn vertex_id(line: usize, id: usize, n: usize) -> Result<Vertex, FormatError> {
    if id == 0 || id > n {
        return Err(FormatError::IdOutOfRange { line, id, n });
    }
    Ok(id - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let malformed = || FormatError::MalformedHeader { line: hl, text: header.to_string() };
    if fields.len() != 4 || fields[0] != "p" || fields[1] != "tw" {
        return Err(malformed());
    }
    let n: usize = fields[2].parse().map_err(|_| malformed())?;
    let m: usize = fields[3].parse().map_err(|_| malformed())?;
    let mut g = Graph::from_edges(n, []).expect("no edges");
    let mut found = 0;
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(FormatError::MalformedLine { line, text: text.to_string() });
        }
        let ids = numbers(line, text, &fields)?;
        let (u, v) = (vertex_id(line, ids[0], n)?, vertex_id(line, ids[1], n)?);
        if u == v {
            return Err(FormatError::SelfLoop { line, u: ids[0] });
        }
        if !g.add_edge(u, v).expect("ids in range") {
            return Err(FormatError::DuplicateEdge { line, u: ids[0], v: ids[1] });
        }
        found += 1;
    }
    if found != m {
        return Err(FormatError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

/// 0-based dense index of each vertex of `g` in id order.
pub fn dense_index(g: &Graph) -> BTreeMap<Vertex, usize> {
    g.vertices().enumerate().map(|(i, v)| (v, i)).collect()
}

pub fn write_graph(g: &Graph) -> String {
    let index = dense_index(g);
    let mut out = format!("p tw {} {}\n", g.vertex_count(), g.edge_count());
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (index[&u] + 1, index[&v] + 1)).collect();
    edges.sort_unstable();
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a `.td` file for a graph with `n` vertices. Bag `i` becomes node
/// `i - 1`.
pub fn parse_td(text: &str, n: usize) -> Result<TreeDecomposition, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let malformed = || FormatError::MalformedHeader { line: hl, text: header.to_string() };
    if fields.len() != 5 || fields[0] != "s" || fields[1] != "td" {
        return Err(malformed());
    }
    let declared = numbers(hl, header, &fields[2..]).map_err(|_| malformed())?;
    let (count, size, vertices) = (declared[0], declared[1], declared[2]);
    if vertices != n {
        return Err(FormatError::VertexCount { expected: n, found: vertices });
    }
    let mut bags: Vec<Option<Bag>> = vec![None; count];
    let mut tree_edges = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.first() == Some(&"b") && fields.len() >= 2 {
            let ids = numbers(line, text, &fields[1..])?;
            let slot = ids[0]
                .checked_sub(1)
                .filter(|&i| i < count && bags[i].is_none())
                .ok_or(FormatError::BadBagId { line, id: ids[0], count })?;
            let mut seen = BTreeSet::new();
            for &id in &ids[1..] {
                if !seen.insert(vertex_id(line, id, n)?) {
                    return Err(FormatError::RepeatedVertex { line, id });
                }
            }
            bags[slot] = Some(seen.into_iter().collect());
        } else if fields.len() == 2 {
            let ids = numbers(line, text, &fields)?;
            for &id in &ids {
                if id == 0 || id > count {
                    return Err(FormatError::BadBagId { line, id, count });
                }
            }
            tree_edges.push((ids[0] - 1, ids[1] - 1));
        } else {
            return Err(FormatError::MalformedLine { line, text: text.to_string() });
        }
    }
    let mut td = TreeDecomposition::new();
    let mut largest = 0;
    for (i, bag) in bags.into_iter().enumerate() {
        let bag = bag.ok_or(FormatError::MissingBag(i + 1))?;
        largest = largest.max(bag.len());
        td.add_node(bag);
    }
    if largest != size {
        return Err(FormatError::BagSize { expected: size, found: largest });
    }
    for (a, b) in tree_edges {
        td.add_tree_edge(a, b);
    }
    Ok(td)
}

/// Parses a `.td` file whose tree is a path; bags are returned in path order.
pub fn parse_pd(text: &str, n: usize) -> Result<PathDecomposition, FormatError> {
    parse_td(text, n)?.as_path().ok_or(FormatError::NotAPath)
}

/// Writes `td` with vertices renamed as in [`write_graph`] for `g`.
pub fn write_td(g: &Graph, td: &TreeDecomposition) -> String {
    let index = dense_index(g);
    let nodes: BTreeMap<usize, usize> = td.nodes().enumerate().map(|(i, x)| (x, i + 1)).collect();
    let largest = td.bags().map(|(_, b)| b.len()).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", nodes.len(), largest, g.vertex_count());
    for (x, bag) in td.bags() {
        let mut ids: Vec<usize> = bag.iter().map(|v| index[&v] + 1).collect();
        ids.sort_unstable();
        let body: String = ids.iter().map(|v| format!(" {v}")).collect();
        out.push_str(&format!("b {}{body}\n", nodes[&x]));
    }
    let mut edges: Vec<(usize, usize)> = td
        .tree_edges()
        .map(|(a, b)| {
            let (a, b) = (nodes[&a], nodes[&b]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    for (a, b) in edges {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn write_pd(g: &Graph, pd: &PathDecomposition) -> String {
    write_td(g, &pd.to_tree_decomposition())
}

pub fn parse_ordering(text: &str, n: usize) -> Result<LinearOrdering, FormatError> {
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    for (line, text) in content_lines(text) {
        let ids = numbers(line, text, &[text])?;
        let v = vertex_id(line, ids[0], n)?;
        if !seen.insert(v) {
            return Err(FormatError::RepeatedVertex { line, id: ids[0] });
        }
        order.push(v);
    }
    Ok(LinearOrdering::new(order))
}

pub fn write_ordering(g: &Graph, f: &LinearOrdering) -> String {
    let index = dense_index(g);
    f.iter().map(|v| format!("{}\n", index[&v] + 1)).collect()
}

pub fn write_coordinates(g: &Graph, coords: &BTreeMap<Vertex, Coord>) -> String {
    let index = dense_index(g);
    coords
        .iter()
        .map(|(v, (x, y, z))| format!("{} {x} {y} {z}\n", index[v] + 1))
        .collect()
}

pub fn parse_coordinates(text: &str, n: usize) -> Result<BTreeMap<Vertex, Coord>, FormatError> {
    let mut out = BTreeMap::new();
    for (line, text) in content_lines(text) {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(FormatError::MalformedLine { line, text: text.to_string() });
        }
        let ids = numbers(line, text, &fields)?;
        let v = vertex_id(line, ids[0], n)?;
        if out.insert(v, (ids[1], ids[2], ids[3])).is_some() {
            return Err(FormatError::RepeatedVertex { line, id: ids[0] });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2() {
        let g = parse_graph("p tw 2 1\n1 2\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn comments_are_ignored() {
        let g = parse_graph("c a triangle\np tw 3 3\nc edges\n1 2\n2 3\n\n1 3\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn graph_errors() {
        assert_eq!(
            parse_graph("p tw 2 1\n1 3\n"),
            Err(FormatError::IdOutOfRange { line: 2, id: 3, n: 2 })
        );
        assert_eq!(
            parse_graph("p tw 2 2\n1 2\n2 1\n"),
            Err(FormatError::DuplicateEdge { line: 3, u: 2, v: 1 })
        );
        assert!(matches!(parse_graph("p td 2 1\n1 2\n"), Err(FormatError::MalformedHeader { .. })));
        assert_eq!(parse_graph(""), Err(FormatError::MissingHeader));
        assert_eq!(parse_graph("p tw 2 2\n1 2\n"), Err(FormatError::EdgeCount { expected: 2, found: 1 }));
        assert_eq!(parse_graph("p tw 2 1\n2 2\n"), Err(FormatError::SelfLoop { line: 2, u: 2 }));
    }

    #[test]
    fn td_round_trip() {
        let g = parse_graph("p tw 3 2\n1 2\n2 3\n").unwrap();
        let text = "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
        let td = parse_td(text, 3).unwrap();
        assert_eq!(write_td(&g, &td), text);
        assert_eq!(parse_pd(text, 3).unwrap().bags.len(), 2);
        assert_eq!(
            parse_td("s td 2 3 3\nb 1 1 2\nb 2 2 3\n1 2\n", 3),
            Err(FormatError::BagSize { expected: 3, found: 2 })
        );
        assert_eq!(parse_td("s td 2 2 3\nb 1 1 2\n", 3), Err(FormatError::MissingBag(2)));
    }

    #[test]
    fn ordering_and_coordinates() {
        let g = parse_graph("p tw 3 0\n").unwrap();
        let f = parse_ordering("3\n1\n2\n", 3).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![2, 0, 1]);
        assert_eq!(write_ordering(&g, &f), "3\n1\n2\n");
        assert!(matches!(parse_ordering("1\n1\n", 3), Err(FormatError::RepeatedVertex { .. })));
        let coords = parse_coordinates("1 0 0 0\n2 1 0 0\n3 1 1 0\n", 3).unwrap();
        assert_eq!(write_coordinates(&g, &coords), "1 0 0 0\n2 1 0 0\n3 1 1 0\n");
    }
}
