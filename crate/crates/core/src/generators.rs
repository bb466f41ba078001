//! Named graph families and seeded random cubic graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// `rows x cols` grid, vertex `(i, j)` has id `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).unwrap()
}

/// Complete binary tree with `2^(height+1) - 1` vertices in heap order.
pub fn complete_binary_tree(height: u32) -> Graph {
    let n = (1usize << (height + 1)) - 1;
    Graph::from_edges(n, (1..n).map(|v| ((v - 1) / 2, v))).unwrap()
}

/// The 3-dimensional hypercube.
pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|v| {
        (0..3)
            .map(move |b| (v, v ^ (1 << b)))
            .filter(|&(a, b)| a < b)
    });
    Graph::from_edges(8, edges).unwrap()
}

/// Prism over a `k`-cycle: cubic on `2k` vertices.
pub fn prism(k: usize) -> Graph {
    assert!(k >= 3);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    Graph::from_edges(2 * k, edges).unwrap()
}

/// Uniform-ish random simple cubic graph on `n` vertices (n even, n >= 4),
/// drawn with the configuration model and rejection of loops and multi-edges.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Option<Graph> {
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let mut points: Vec<Vertex> = (0..n).flat_map(|v| [v; 3]).collect();
    'retry: loop {
        points.shuffle(rng);
        let mut g = Graph::from_edges(n, []).unwrap();
        for pair in points.chunks(2) {
            match g.add_edge(pair[0], pair[1]) {
                Ok(true) => {}
                _ => continue 'retry,
            }
        }
        return Some(g);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_regularity;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn cubic_families() {
        assert!(check_regularity(&complete(4), 3));
        assert!(check_regularity(&complete_bipartite(3, 3), 3));
        assert!(check_regularity(&cube(), 3));
        assert!(check_regularity(&prism(11), 3));
        assert_eq!(cube().edge_count(), 12);
    }

    #[test]
    fn random_cubic_is_seeded_and_cubic() {
        let a = random_cubic(10, &mut StdRng::seed_from_u64(7)).unwrap();
        let b = random_cubic(10, &mut StdRng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert!(check_regularity(&a, 3));
        assert!(random_cubic(7, &mut StdRng::seed_from_u64(7)).is_none());
    }

    #[test]
    fn sizes() {
        assert_eq!(grid(3, 4).edge_count(), 17);
        assert_eq!(complete_binary_tree(2).vertex_count(), 7);
        assert_eq!(star(3).degree(0), 3);
    }
}
