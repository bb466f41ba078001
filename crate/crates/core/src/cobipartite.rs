//! Pathwidth to treewidth on co-bipartite graphs.
//!
//! `F(G)` has two copies `v` and `v'` of each source vertex. Both copy sets
//! are cliques; the cross edges are `v v'` for every vertex and `u v'`,
//! `v u'` for every source edge `u v`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::decomposition::{
    verify_path_decomposition, Bag, DecompositionError, PathDecomposition, TreeDecomposition,
};
use crate::graph::{Graph, Vertex};
use crate::trace::{ReductionTrace, Role};
use crate::transform::{pathify_between_cliques, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoBipartiteError {
    #[error("decomposition of the source graph is invalid: {0}")]
    InvalidSource(DecompositionError),
    #[error("decomposition of F(G) is invalid: {0}")]
    InvalidTarget(DecompositionError),
    #[error("first bag must contain every unprimed copy and last bag every primed copy")]
    EndpointCliques,
    #[error(transparent)]
    Transform(#[from] TransformError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoBipartiteInstance {
    pub source: Graph,
    pub graph: Graph,
    pub side_v: BTreeSet<Vertex>,
    pub side_vprime: BTreeSet<Vertex>,
    pub trace: ReductionTrace,
    /// `v' = v + offset`; equals `n` on dense ids.
    pub offset: usize,
}

impl CoBipartiteInstance {
    pub fn prime(&self, v: Vertex) -> Vertex {
        v + self.offset
    }
}

pub fn build_f(g: &Graph) -> CoBipartiteInstance {
    let offset = g.next_free_id();
    let side_v: BTreeSet<Vertex> = g.vertices().collect();
    let side_vprime: BTreeSet<Vertex> = side_v.iter().map(|v| v + offset).collect();
    let mut f = Graph::new();
    let mut trace = ReductionTrace::new();
    for &v in &side_v {
        f.add_vertex(v);
        f.add_vertex(v + offset);
        trace.record(v, Role::Original(v));
        trace.record(v + offset, Role::Primed(v));
    }
    for side in [&side_v, &side_vprime] {
        for &u in side {
            for &w in side.range(u + 1..) {
                f.add_edge(u, w).unwrap();
            }
        }
    }
    for &v in &side_v {
        f.add_edge(v, v + offset).unwrap();
    }
    for (u, v) in g.edges() {
        f.add_edge(u, v + offset).unwrap();
        f.add_edge(v, u + offset).unwrap();
    }
    CoBipartiteInstance { source: g.clone(), graph: f, side_v, side_vprime, trace, offset }
}

/// Bag `i` holds every `v` still alive at or after `i` and every `v'` whose
/// `v` appeared at or before `i`, so each bag grows by exactly `n`.
pub fn lift_pathdec_to_f(
    inst: &CoBipartiteInstance,
    pd: &PathDecomposition,
) -> Result<PathDecomposition, CoBipartiteError> {
    verify_path_decomposition(&inst.source, pd).map_err(CoBipartiteError::InvalidSource)?;
    let mut first: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut last: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, bag) in pd.bags.iter().enumerate() {
        for v in bag.iter() {
            first.entry(v).or_insert(i);
            last.insert(v, i);
        }
    }
    let bags = (0..pd.len())
        .map(|i| {
            let early = last.iter().filter(|&(_, &l)| l >= i).map(|(&v, _)| v);
            let late = first.iter().filter(|&(_, &f)| f <= i).map(|(&v, _)| inst.prime(v));
            early.chain(late).collect()
        })
        .collect();
    Ok(PathDecomposition::new(bags))
}

/// Keeps the source vertices whose two copies share the bag. Requires the
/// endpoint form: first bag covers all `v`, last bag covers all `v'`.
pub fn project_pathdec_from_f(
    inst: &CoBipartiteInstance,
    pd: &PathDecomposition,
) -> Result<PathDecomposition, CoBipartiteError> {
    verify_path_decomposition(&inst.graph, pd).map_err(CoBipartiteError::InvalidTarget)?;
    if inst.source.is_empty() {
        return Ok(PathDecomposition::new(Vec::new()));
    }
    let endpoints_ok = pd.bags.first().is_some_and(|b| b.contains_all(&inst.side_v))
        && pd.bags.last().is_some_and(|b| b.contains_all(&inst.side_vprime));
    if !endpoints_ok {
        return Err(CoBipartiteError::EndpointCliques);
    }
    let bags: Vec<Bag> = pd
        .bags
        .iter()
        .map(|b| inst.side_v.iter().copied().filter(|&v| b.contains(v) && b.contains(inst.prime(v))).collect())
        .collect();
    let out = PathDecomposition::new(bags);
    debug_assert!(verify_path_decomposition(&inst.source, &out).is_ok());
    Ok(out)
}

/// Pathifies an arbitrary tree decomposition of `F(G)` between the two
/// cliques, then projects it.
pub fn project_any_decomposition(
    inst: &CoBipartiteInstance,
    td: &TreeDecomposition,
) -> Result<PathDecomposition, CoBipartiteError> {
    if inst.source.is_empty() {
        return Ok(PathDecomposition::new(Vec::new()));
    }
    let pd = pathify_between_cliques(&inst.graph, td, &inst.side_v, &inst.side_vprime)?;
    project_pathdec_from_f(inst, &pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::solvers::{exact_pathwidth, exact_treewidth};

    #[test]
    fn small_instances() {
        let k1 = build_f(&complete(1));
        assert_eq!(k1.graph, complete(2));
        let k2 = build_f(&complete(2));
        assert_eq!((k2.graph.vertex_count(), k2.graph.edge_count()), (4, 6));
        let edgeless = build_f(&Graph::from_edges(3, []).unwrap());
        assert_eq!(edgeless.graph.edge_count(), 9);
        assert_eq!(exact_treewidth(&edgeless.graph, 24).unwrap().width, 3);
    }

    #[test]
    fn lift_p3() {
        let inst = build_f(&path(3));
        let pd = PathDecomposition::new(vec![Bag::from([0, 1]), Bag::from([1, 2])]);
        let lifted = lift_pathdec_to_f(&inst, &pd).unwrap();
        assert_eq!(lifted.bags[0], Bag::from([0, 1, 2, 3, 4]));
        assert_eq!(lifted.bags[1], Bag::from([1, 2, 3, 4, 5]));
        assert_eq!(verify_path_decomposition(&inst.graph, &lifted), Ok(4));
    }

    #[test]
    fn project_k4() {
        let inst = build_f(&complete(2));
        let pd = PathDecomposition::new(vec![Bag::from([0, 1, 2, 3])]);
        let projected = project_pathdec_from_f(&inst, &pd).unwrap();
        assert_eq!(projected.bags, vec![Bag::from([0, 1])]);
    }

    #[test]
    fn project_rejects_wrong_endpoints() {
        let inst = build_f(&path(2));
        let pd = PathDecomposition::new(vec![Bag::from([0, 1, 2, 3]), Bag::from([0, 1])]);
        assert_eq!(project_pathdec_from_f(&inst, &pd), Err(CoBipartiteError::EndpointCliques));
    }

    #[test]
    fn optimal_f_of_c4_projects_to_width_two() {
        let c4 = cycle(4);
        let inst = build_f(&c4);
        let tw = exact_treewidth(&inst.graph, 24).unwrap();
        assert_eq!(tw.width, 6);
        let pd = project_any_decomposition(&inst, &tw.certificate).unwrap();
        assert_eq!(verify_path_decomposition(&c4, &pd), Ok(2));
        assert_eq!(exact_pathwidth(&inst.graph, 24).unwrap().width, 6);
    }
}
