use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use super::SpecialError;
use crate::decomposition::{verify_tree_decomposition, Bag, TreeDecomposition};
use crate::graph::{check_regularity, Edge, Graph, Vertex};
use crate::trace::{ReductionTrace, Role};
use crate::transform::first_bag_containing;

pub type Coord = (usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("vertex {vertex} at {coord:?} lies outside the grid {dims:?}")]
    OutOfBounds { vertex: Vertex, coord: Coord, dims: Coord },
    #[error("vertices {0} and {1} share a grid point")]
    Collision(Vertex, Vertex),
    #[error("vertex {0} has no coordinate")]
    Unplaced(Vertex),
    #[error("edge {{{0}, {1}}} joins points at distance other than 1")]
    LongEdge(Vertex, Vertex),
    #[error("vertices {0} and {1} are grid neighbours but not adjacent")]
    NotInduced(Vertex, Vertex),
    #[error("vertex {0} has degree above 3")]
    NotSubcubic(Vertex),
}

/// A subcubic graph placed on grid points so that it is an induced subgraph
/// of the `dims` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridEmbedding {
    pub host_graph: Graph,
    pub coords: BTreeMap<Vertex, Coord>,
    pub dims: Coord,
    /// Source vertex -> branch vertex of the host.
    pub branch: BTreeMap<Vertex, Vertex>,
    /// Source edge -> subdivision vertices from the smaller endpoint on.
    pub paths: BTreeMap<Edge, Vec<Vertex>>,
    pub trace: ReductionTrace,
}

impl GridEmbedding {
    /// Checks placement, the induced-subgraph property in both directions,
    /// and subcubicity.
    pub fn validate(&self) -> Result<(), EmbeddingError> {
        let (dx, dy, dz) = self.dims;
        let mut at: HashMap<Coord, Vertex> = HashMap::new();
        for v in self.host_graph.vertices() {
            let c = *self.coords.get(&v).ok_or(EmbeddingError::Unplaced(v))?;
            if c.0 >= dx || c.1 >= dy || c.2 >= dz {
                return Err(EmbeddingError::OutOfBounds { vertex: v, coord: c, dims: self.dims });
            }
            if let Some(u) = at.insert(c, v) {
                return Err(EmbeddingError::Collision(u, v));
            }
            if self.host_graph.degree(v) > 3 {
                return Err(EmbeddingError::NotSubcubic(v));
            }
        }
        for (u, v) in self.host_graph.edges() {
            if l1(self.coords[&u], self.coords[&v]) != 1 {
                return Err(EmbeddingError::LongEdge(u, v));
            }
        }
        for (&c, &v) in &at {
            for n in grid_neighbours(c) {
                if let Some(&u) = at.get(&n) {
                    if !self.host_graph.has_edge(u, v) {
                        return Err(EmbeddingError::NotInduced(u.min(v), u.max(v)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Largest number of subdivision vertices on one source edge.
    pub fn max_subdivisions(&self) -> usize {
        self.paths.values().map(Vec::len).max().unwrap_or(0)
    }
}

fn l1(a: Coord, b: Coord) -> usize {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1) + a.2.abs_diff(b.2)
}

fn grid_neighbours((x, y, z): Coord) -> impl Iterator<Item = Coord> {
    let up = [(x + 1, y, z), (x, y + 1, z), (x, y, z + 1)];
    let down = [
        x.checked_sub(1).map(|x| (x, y, z)),
        y.checked_sub(1).map(|y| (x, y, z)),
        z.checked_sub(1).map(|z| (x, y, z)),
    ];
    up.into_iter().chain(down.into_iter().flatten())
}

/// Embeds a cubic graph with `n` vertices into the `(6n-1) x (3n+1) x 3`
/// grid. The `i`-th vertex (in id order) occupies `(x, 0, 0)` for
/// `x in 6i..=6i+4`, with its branch vertex at `x = 6i+2`; its neighbours in
/// id order use the ports `x = 6i, 6i+2, 6i+4`. The `k`-th edge (1-based,
/// sorted) rises from both ports to `y = 2k`, steps to `z = 1`, and is
/// bridged along `z = 2`.
///
/// Host ids: branch vertex of the `i`-th vertex is `i`; subdivision vertices
/// follow edge by edge, each path from the smaller endpoint on.
pub fn embed_3d_grid(g: &Graph) -> Result<GridEmbedding, SpecialError> {
    if g.is_empty() || !check_regularity(g, 3) {
        return Err(SpecialError::NotCubic);
    }
    let n = g.vertex_count();
    let index: BTreeMap<Vertex, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let port = |v: Vertex, towards: Vertex| -> usize {
        let a = g.neighbors(v).position(|u| u == towards).expect("adjacent");
        6 * index[&v] + 2 * a
    };

    let mut host = Graph::new();
    let mut coords = BTreeMap::new();
    let mut trace = ReductionTrace::new();
    let mut branch = BTreeMap::new();
    for (&v, &i) in &index {
        host.add_vertex(i);
        coords.insert(i, (6 * i + 2, 0, 0));
        trace.record(i, Role::Branch(v));
        branch.insert(v, i);
    }
    let mut next = n;
    let mut paths = BTreeMap::new();
    for (k, (u, w)) in g.edges().enumerate() {
        let level = 2 * (k + 1);
        let (pu, pw) = (port(u, w), port(w, u));
        let hub_u = 6 * index[&u] + 2;
        let hub_w = 6 * index[&w] + 2;
        let mut route: Vec<Coord> = walk_x(hub_u, pu).map(|x| (x, 0, 0)).collect();
        route.extend((1..=level).map(|y| (pu, y, 0)));
        route.push((pu, level, 1));
        route.push((pu, level, 2));
        route.extend(walk_x(pu, pw).map(|x| (x, level, 2)));
        route.push((pw, level, 1));
        route.extend((1..=level).rev().map(|y| (pw, y, 0)));
        let tail: Vec<Coord> = walk_x(hub_w, pw).map(|x| (x, 0, 0)).collect();
        route.extend(tail.into_iter().rev());
        let mut previous = branch[&u];
        let mut internal = Vec::new();
        for c in route {
            let id = next;
            next += 1;
            host.add_vertex(id);
            host.add_edge(previous, id)?;
            coords.insert(id, c);
            trace.record(id, Role::Subdivision { edge: (u, w), index: internal.len() });
            internal.push(id);
            previous = id;
        }
        host.add_edge(previous, branch[&w])?;
        paths.insert((u, w), internal);
    }
    Ok(GridEmbedding { host_graph: host, coords, dims: (6 * n - 1, 3 * n + 1, 3), branch, paths, trace })
}

/// Points strictly after `from` up to and including `to` along the x axis.
fn walk_x(from: usize, to: usize) -> Box<dyn Iterator<Item = usize>> {
    if to >= from {
        Box::new(from + 1..=to)
    } else {
        Box::new((to..from).rev())
    }
}

/// Renames each source vertex to its branch vertex and, for every edge
/// `u w` with path `p_1..p_m`, hangs the chain `{u, w, p_1}`,
/// `{w, p_1, p_2}`, ..., `{w, p_{m-1}, p_m}` off a bag holding `u` and `w`.
pub fn lift_decomposition_to_subdivision(
    emb: &GridEmbedding,
    source: &Graph,
    td: &TreeDecomposition,
) -> Result<TreeDecomposition, SpecialError> {
    verify_tree_decomposition(source, td)?;
    let mut out = td.clone();
    let nodes: Vec<_> = td.nodes().collect();
    for x in nodes {
        out.set_bag(x, td.bag(x).expect("listed node").mapped(|v| emb.branch[&v]));
    }
    for (&(u, w), path) in &emb.paths {
        let (bu, bw) = (emb.branch[&u], emb.branch[&w]);
        let anchor = first_bag_containing(&out, &BTreeSet::from([bu, bw]))
            .ok_or(SpecialError::MissingBag(u, w))?;
        let mut previous = anchor;
        let mut last = bu;
        for &p in path {
            let node = out.add_node(Bag::from_iter([last, bw, p]));
            out.add_tree_edge(previous, node);
            previous = node;
            last = p;
        }
    }
    Ok(out)
}
