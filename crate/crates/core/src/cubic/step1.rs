use std::collections::{BTreeMap, BTreeSet};

use super::CubicError;
use crate::decomposition::{
    verify_tree_decomposition, LinearOrdering, PathDecomposition, TreeDecomposition,
};
use crate::graph::{check_regularity, Edge, Graph, Vertex};
use crate::trace::{ReductionTrace, Role};
use crate::transform::pathify_between_cliques;

/// `G1` with its copy sets. Vertex `v` at index `i` of the sorted vertex list
/// owns ids `3i..3i+3`; edge `e` at index `k` of the sorted edge list owns
/// ids `3n + 2k` and `3n + 2k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step1Instance {
    pub source: Graph,
    pub graph: Graph,
    pub a_sets: BTreeMap<Vertex, [Vertex; 3]>,
    pub b_sets: BTreeMap<Edge, [Vertex; 2]>,
    pub trace: ReductionTrace,
}

impl Step1Instance {
    pub fn n(&self) -> usize {
        self.source.vertex_count()
    }

    pub fn a(&self) -> BTreeSet<Vertex> {
        self.a_sets.values().flatten().copied().collect()
    }

    pub fn b(&self) -> BTreeSet<Vertex> {
        self.b_sets.values().flatten().copied().collect()
    }

    /// Source edges at `v` in sorted order.
    pub fn incident_edges(&self, v: Vertex) -> Vec<Edge> {
        self.b_sets.keys().copied().filter(|&(x, y)| x == v || y == v).collect()
    }

    /// `v^1..3` and `e^1, e^2` for each edge at `v`: a clique once `A` and `B`
    /// are cliques.
    pub fn vertex_clique(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut set: BTreeSet<Vertex> = self.a_sets[&v].iter().copied().collect();
        for e in self.incident_edges(v) {
            set.extend(self.b_sets[&e]);
        }
        set
    }
}

pub fn build_g1(g: &Graph) -> Result<Step1Instance, CubicError> {
    if g.is_empty() || !check_regularity(g, 3) {
        return Err(CubicError::NotCubic);
    }
    let n = g.vertex_count();
    let mut trace = ReductionTrace::new();
    let mut a_sets = BTreeMap::new();
    for (i, v) in g.vertices().enumerate() {
        let copies = [3 * i, 3 * i + 1, 3 * i + 2];
        for (c, &x) in copies.iter().enumerate() {
            trace.record(x, Role::VertexCopy { vertex: v, copy: c as u8 + 1 });
        }
        a_sets.insert(v, copies);
    }
    let mut b_sets = BTreeMap::new();
    for (k, e) in g.edges().enumerate() {
        let copies = [3 * n + 2 * k, 3 * n + 2 * k + 1];
        for (c, &x) in copies.iter().enumerate() {
            trace.record(x, Role::EdgeCopy { edge: e, copy: c as u8 + 1 });
        }
        b_sets.insert(e, copies);
    }
    let total = 3 * n + 2 * b_sets.len();
    let mut g1 = Graph::from_edges(total, [])?;
    for side in [0..3 * n, 3 * n..total] {
        for u in side.clone() {
            for w in u + 1..side.end {
                g1.add_edge(u, w)?;
            }
        }
    }
    for (&(x, y), bs) in &b_sets {
        for v in [x, y] {
            for &a in &a_sets[&v] {
                for &b in bs {
                    g1.add_edge(a, b)?;
                }
            }
        }
    }
    Ok(Step1Instance { source: g.clone(), graph: g1, a_sets, b_sets, trace })
}

/// Bag `i` holds the copies of the vertices at positions `>= i` and the
/// copies of every edge with an endpoint at position `<= i`. Its size is
/// `3n + 3 + cut(i)`, so the width is `3n + 2 + cutwidth(f)`.
pub fn ordering_to_g1_pathdec(
    inst: &Step1Instance,
    f: &LinearOrdering,
) -> Result<PathDecomposition, CubicError> {
    let pos = f.positions(&inst.source)?;
    let bags = (0..f.len())
        .map(|i| {
            let vertex_part = f.order[i..].iter().flat_map(|v| inst.a_sets[v]);
            let edge_part = inst
                .b_sets
                .iter()
                .filter(|(&(x, y), _)| pos[&x].min(pos[&y]) <= i)
                .flat_map(|(_, bs)| *bs);
            vertex_part.chain(edge_part).collect()
        })
        .collect();
    Ok(PathDecomposition::new(bags))
}

/// Pathifies between `A` and `B`, sets `g(v)` to the last bag holding all of
/// `A_v`, and sorts by `(g(v), v)`. The result has cutwidth at most
/// `width(td) - 3n - 2`.
pub fn g1_decomposition_to_ordering(
    inst: &Step1Instance,
    td: &TreeDecomposition,
) -> Result<LinearOrdering, CubicError> {
    let width = verify_tree_decomposition(&inst.graph, td)?;
    let required = 3 * inst.n() as i64 + 2;
    if width < required {
        return Err(CubicError::WidthTooSmall { width, required });
    }
    let pd = pathify_between_cliques(&inst.graph, td, &inst.a(), &inst.b())?;
    let mut keyed: Vec<(usize, Vertex)> = inst
        .a_sets
        .iter()
        .map(|(&v, copies)| {
            let g = pd
                .bags
                .iter()
                .rposition(|bag| bag.contains_all(copies))
                .expect("first bag contains A");
            (g, v)
        })
        .collect();
    keyed.sort_unstable();
    Ok(LinearOrdering::new(keyed.into_iter().map(|(_, v)| v).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{cutwidth_of_ordering, verify_path_decomposition};
    use crate::generators::{complete, complete_bipartite, path};
    use crate::transform::find_clique_bag;

    #[test]
    fn sizes() {
        let k4 = build_g1(&complete(4)).unwrap();
        assert_eq!(k4.graph.vertex_count(), 24);
        assert_eq!(k4.graph.edge_count(), 204);
        assert_eq!(build_g1(&complete_bipartite(3, 3)).unwrap().graph.vertex_count(), 36);
        assert_eq!(build_g1(&path(3)), Err(CubicError::NotCubic));
    }

    #[test]
    fn k4_identity_ordering() {
        let g = complete(4);
        let inst = build_g1(&g).unwrap();
        let f = LinearOrdering::identity(&g);
        let pd = ordering_to_g1_pathdec(&inst, &f).unwrap();
        assert_eq!(pd.len(), 4);
        assert_eq!(verify_path_decomposition(&inst.graph, &pd), Ok(18));
        assert!(pd.bags[0].contains_all(&inst.a()));
        assert!(pd.bags[3].contains_all(&inst.b()));
        let td = pd.to_tree_decomposition();
        assert_eq!(find_clique_bag(&inst.graph, &td, &inst.a()), Ok(0));

        let back = g1_decomposition_to_ordering(&inst, &td).unwrap();
        assert!(cutwidth_of_ordering(&g, &back).unwrap() <= 4);
    }
}
