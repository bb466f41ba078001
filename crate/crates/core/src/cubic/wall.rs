use std::collections::BTreeMap;

use super::CubicError;
use crate::decomposition::{Bag, PathDecomposition};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallKind {
    /// Vertical rung `(i,j)-(i+1,j)` only when `i + j` is even.
    Brick,
    /// Every vertical rung present.
    Grid,
}

/// A wall with `rows x cols` vertices; cell `(i, j)` has id
/// `base + i * cols + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickWall {
    pub graph: Graph,
    pub coords: BTreeMap<Vertex, (usize, usize)>,
    pub rows: usize,
    pub cols: usize,
    pub base: Vertex,
    pub kind: WallKind,
}

impl BrickWall {
    pub fn vertex(&self, row: usize, col: usize) -> Vertex {
        debug_assert!(row < self.rows && col < self.cols);
        self.base + row * self.cols + col
    }

    /// Column `col`, top row first.
    pub fn column(&self, col: usize) -> Vec<Vertex> {
        (0..self.rows).map(|i| self.vertex(i, col)).collect()
    }

    pub fn row(&self, row: usize) -> Vec<Vertex> {
        (0..self.cols).map(|j| self.vertex(row, j)).collect()
    }
}

pub fn build_brick_wall(rows: usize, cols: usize) -> Result<BrickWall, CubicError> {
    build_wall_at(rows, cols, 0, WallKind::Brick)
}

pub fn build_grid_wall(rows: usize, cols: usize) -> Result<BrickWall, CubicError> {
    build_wall_at(rows, cols, 0, WallKind::Grid)
}

pub(crate) fn build_wall_at(
    rows: usize,
    cols: usize,
    base: Vertex,
    kind: WallKind,
) -> Result<BrickWall, CubicError> {
    if rows < 2 || cols < 2 {
        return Err(CubicError::DegenerateWall { rows, cols });
    }
    let id = |i: usize, j: usize| base + i * cols + j;
    let mut graph = Graph::new();
    let mut coords = BTreeMap::new();
    for i in 0..rows {
        for j in 0..cols {
            graph.add_vertex(id(i, j));
            coords.insert(id(i, j), (i, j));
        }
    }
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                graph.add_edge(id(i, j), id(i, j + 1))?;
            }
            let rung = kind == WallKind::Grid || (i + j) % 2 == 0;
            if i + 1 < rows && rung {
                graph.add_edge(id(i, j), id(i + 1, j))?;
            }
        }
    }
    Ok(BrickWall { graph, coords, rows, cols, base, kind })
}

/// Column sweep: starts with the first column, moves one row at a time into
/// the next column, and ends with the last column. Every intermediate bag has
/// `rows + 1` vertices, so the width is `rows`.
pub fn brick_wall_pathdec(w: &BrickWall) -> PathDecomposition {
    let mut bags: Vec<Bag> = vec![w.column(0).into_iter().collect()];
    for j in 0..w.cols - 1 {
        for i in 0..w.rows {
            let next = (0..=i).map(|r| w.vertex(r, j + 1));
            let current = (i..w.rows).map(|r| w.vertex(r, j));
            bags.push(next.chain(current).collect());
        }
    }
    bags.push(w.column(w.cols - 1).into_iter().collect());
    PathDecomposition::new(bags)
}
