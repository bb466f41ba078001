//! Brute-force oracles over all vertex orderings. Exponential; keep `n <= 7`.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use widthforge::{Graph, Vertex};

/// Minimum over orderings of the largest number of earlier vertices with a
/// later neighbour, counted after each prefix.
pub fn naive_pathwidth(g: &Graph) -> i64 {
    if g.is_empty() {
        return -1;
    }
    let vs: Vec<Vertex> = g.vertices().collect();
    vs.iter()
        .copied()
        .permutations(vs.len())
        .map(|order| {
            (1..=order.len())
                .map(|i| {
                    let later: BTreeSet<Vertex> = order[i..].iter().copied().collect();
                    order[..i]
                        .iter()
                        .filter(|&&u| g.neighbors(u).any(|w| later.contains(&w)))
                        .count()
                })
                .max()
                .unwrap_or(0) as i64
        })
        .min()
        .expect("nonempty graph")
}

/// Minimum over elimination orderings of the largest degree at elimination.
pub fn naive_treewidth(g: &Graph) -> i64 {
    if g.is_empty() {
        return -1;
    }
    let vs: Vec<Vertex> = g.vertices().collect();
    vs.iter()
        .copied()
        .permutations(vs.len())
        .map(|order| {
            let mut work = g.clone();
            let mut width = 0;
            for v in order {
                let nbrs: Vec<Vertex> = work.neighbors(v).collect();
                width = width.max(nbrs.len());
                for (i, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[i + 1..] {
                        work.add_edge(a, b).unwrap();
                    }
                }
                work.remove_vertex(v);
            }
            width as i64
        })
        .min()
        .expect("nonempty graph")
}

/// Minimum over orderings of the largest number of edges crossing a gap.
pub fn naive_cutwidth(g: &Graph) -> usize {
    let vs: Vec<Vertex> = g.vertices().collect();
    vs.iter()
        .copied()
        .permutations(vs.len())
        .map(|order| {
            (1..order.len())
                .map(|i| {
                    let left: BTreeSet<Vertex> = order[..i].iter().copied().collect();
                    g.edges().filter(|(u, w)| left.contains(u) != left.contains(w)).count()
                })
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap_or(0)
}
