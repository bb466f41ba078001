//! Exhaustive catalogue of small graphs up to isomorphism.
//!
//! Graphs on `n <= 8` vertices are encoded as bitmasks over the `n(n-1)/2`
//! vertex pairs. Classes for `n` are grown from classes for `n - 1` by adding
//! one vertex with every possible neighbourhood, then deduplicated by a
//! canonical form: the smallest mask over all relabelings that list vertices
//! in nondecreasing degree order.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest vertex count the catalogue supports.
pub const MAX_ORDER: usize = 8;

fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

fn has(mask: u32, i: usize, j: usize) -> bool {
    mask >> pair_index(i, j) & 1 == 1
}

fn canonical(n: usize, mask: u32) -> u32 {
    let degree: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| u != v && has(mask, u, v)).count())
        .collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| degree[v]);
    for v in by_degree {
        match classes.last_mut() {
            Some(c) if degree[c[0]] == degree[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    // slot -> original vertex, filled class by class
    let mut placement: Vec<usize> = Vec::with_capacity(n);
    let mut best = u32::MAX;
    search(n, mask, &classes, 0, &mut placement, &mut best);
    best
}

fn search(
    n: usize,
    mask: u32,
    classes: &[Vec<usize>],
    class: usize,
    placement: &mut Vec<usize>,
    best: &mut u32,
) {
    if class == classes.len() {
        let mut m = 0u32;
        for a in 0..n {
            for b in a + 1..n {
                if has(mask, placement[a], placement[b]) {
                    m |= 1 << pair_index(a, b);
                }
            }
        }
        *best = (*best).min(m);
        return;
    }
    permute(n, mask, classes, class, &mut classes[class].clone(), 0, placement, best);
}

#[allow(clippy::too_many_arguments)]
fn permute(
    n: usize,
    mask: u32,
    classes: &[Vec<usize>],
    class: usize,
    items: &mut Vec<usize>,
    k: usize,
    placement: &mut Vec<usize>,
    best: &mut u32,
) {
    if k == items.len() {
        let before = placement.len();
        placement.extend(items.iter().copied());
        search(n, mask, classes, class + 1, placement, best);
        placement.truncate(before);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(n, mask, classes, class, items, k + 1, placement, best);
        items.swap(k, i);
    }
}

fn to_graph(n: usize, mask: u32) -> Graph {
    let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| has(mask, i, j));
    Graph::from_edges(n, edges).unwrap()
}

fn masks_of_order(n: usize) -> BTreeSet<u32> {
    if n <= 1 {
        return BTreeSet::from([0]);
    }
    let smaller = masks_of_order(n - 1);
    let mut out = BTreeSet::new();
    let new_vertex = n - 1;
    for &m in &smaller {
        for nbrs in 0u32..1 << (n - 1) {
            let mut grown = m;
            for u in 0..n - 1 {
                if nbrs >> u & 1 == 1 {
                    grown |= 1 << pair_index(u, new_vertex);
                }
            }
            out.insert(canonical(n, grown));
        }
    }
    out
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, with vertex ids `0..n`.
pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ORDER, "catalogue supports at most {MAX_ORDER} vertices");
    if n == 0 {
        return vec![Graph::new()];
    }
    masks_of_order(n).into_iter().map(|m| to_graph(n, m)).collect()
}

/// All isomorphism classes on `0..=max_n` vertices.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(graphs_of_order).collect()
}

/// Connected isomorphism classes on `1..=max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(graphs_of_order)
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // number of graphs on n unlabeled vertices
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(graphs_of_order(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn connected_counts() {
        let connected: Vec<usize> = (1..=5)
            .map(|n| graphs_of_order(n).into_iter().filter(Graph::is_connected).count())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21]);
    }
}
