use std::collections::BTreeSet;

use super::SpecialError;
use crate::decomposition::{verify_tree_decomposition, Bag, TreeDecomposition};
use crate::graph::{check_regularity, Graph, Vertex};
use crate::trace::{ReductionTrace, Role};
use crate::transform::first_bag_containing;

/// `K_{d+1}` minus the edge `xy`, with `x` and `y` joined to `anchor`.
/// Every gadget vertex has degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeGadget {
    pub anchor: Vertex,
    pub x: Vertex,
    pub y: Vertex,
    pub rest: Vec<Vertex>,
}

impl DegreeGadget {
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        [self.x, self.y].into_iter().chain(self.rest.iter().copied())
    }
}

/// Adds `d + 1` fresh vertices (ids from `next_free_id`, `x` and `y` first).
pub fn attach_degree_gadget(
    g: &Graph,
    v: Vertex,
    d: usize,
) -> Result<(Graph, DegreeGadget), SpecialError> {
    if d < 3 {
        return Err(SpecialError::DegreeTooSmall(d));
    }
    if !g.has_vertex(v) {
        return Err(crate::graph::GraphError::UnknownVertex(v).into());
    }
    let base = g.next_free_id();
    let ids: Vec<Vertex> = (base..base + d + 1).collect();
    let mut out = g.clone();
    for &u in &ids {
        out.add_vertex(u);
    }
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if (a, b) != (ids[0], ids[1]) {
                out.add_edge(a, b)?;
            }
        }
    }
    out.add_edge(ids[0], v)?;
    out.add_edge(ids[1], v)?;
    let gadget = DegreeGadget { anchor: v, x: ids[0], y: ids[1], rest: ids[2..].to_vec() };
    Ok((out, gadget))
}

/// Hangs `{v, x, y}` off a bag holding `v`, and the bag of the whole gadget
/// except `v` off that. The width becomes `max(width, d)`.
pub fn lift_through_degree_gadget(
    td: &TreeDecomposition,
    gadget: &DegreeGadget,
) -> Result<TreeDecomposition, SpecialError> {
    let anchor = first_bag_containing(td, &BTreeSet::from([gadget.anchor]))
        .ok_or(SpecialError::MissingBag(gadget.anchor, gadget.anchor))?;
    let mut out = td.clone();
    let hinge = out.add_node(Bag::from([gadget.anchor, gadget.x, gadget.y]));
    out.add_tree_edge(anchor, hinge);
    let body = out.add_node(gadget.vertices().collect());
    out.add_tree_edge(hinge, body);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DRegularInstance {
    pub graph: Graph,
    pub gadgets: Vec<DegreeGadget>,
    pub trace: ReductionTrace,
}

/// Odd `d`: `(d - 3) / 2` gadgets on every vertex of a cubic graph. Even `d`:
/// `(d - 4) / 2` gadgets on every vertex of a 4-regular graph. Vertices are
/// processed in id order, all copies for one vertex at a time.
pub fn build_d_regular_instance(g: &Graph, d: usize) -> Result<DRegularInstance, SpecialError> {
    if d < 3 {
        return Err(SpecialError::DegreeTooSmall(d));
    }
    let expected = if d % 2 == 1 { 3 } else { 4 };
    if !check_regularity(g, expected) || g.is_empty() {
        return Err(SpecialError::RegularityMismatch { degree: d, expected });
    }
    let copies = (d - expected) / 2;
    let mut graph = g.clone();
    let mut gadgets = Vec::new();
    let mut trace = ReductionTrace::new();
    let originals: Vec<Vertex> = g.vertices().collect();
    for &v in &originals {
        for _ in 0..copies {
            let (next, gadget) = attach_degree_gadget(&graph, v, d)?;
            for (index, u) in gadget.vertices().enumerate() {
                trace.record(u, Role::DegreeGadget { anchor: v, index });
            }
            graph = next;
            gadgets.push(gadget);
        }
    }
    debug_assert!(check_regularity(&graph, d));
    Ok(DRegularInstance { graph, gadgets, trace })
}

/// Lifts a decomposition of the regular input through every gadget.
pub fn lift_through_d_regular(
    inst: &DRegularInstance,
    base: &Graph,
    td: &TreeDecomposition,
) -> Result<TreeDecomposition, SpecialError> {
    verify_tree_decomposition(base, td)?;
    let mut out = td.clone();
    for gadget in &inst.gadgets {
        out = lift_through_degree_gadget(&out, gadget)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;
    use crate::solvers::exact_treewidth;

    #[test]
    fn gadget_degrees() {
        let (g, gadget) = attach_degree_gadget(&complete(4), 0, 4).unwrap();
        assert_eq!(g.degree(0), 5);
        for u in gadget.vertices() {
            assert_eq!(g.degree(u), 4);
        }
        assert!(!g.has_edge(gadget.x, gadget.y));
        assert!(attach_degree_gadget(&complete(4), 9, 4).is_err());
        assert_eq!(attach_degree_gadget(&complete(4), 0, 2), Err(SpecialError::DegreeTooSmall(2)));
    }

    #[test]
    fn k5_keeps_treewidth() {
        let (g, gadget) = attach_degree_gadget(&complete(5), 2, 4).unwrap();
        let tw = exact_treewidth(&g, 24).unwrap();
        assert_eq!(tw.width, 4);
        let base = exact_treewidth(&complete(5), 24).unwrap().certificate;
        let lifted = lift_through_degree_gadget(&base, &gadget).unwrap();
        assert_eq!(verify_tree_decomposition(&g, &lifted), Ok(4));
    }

    #[test]
    fn regular_builders() {
        for d in [5, 7] {
            let inst = build_d_regular_instance(&complete(4), d).unwrap();
            assert!(check_regularity(&inst.graph, d));
        }
        assert_eq!(
            build_d_regular_instance(&complete(4), 4),
            Err(SpecialError::RegularityMismatch { degree: 4, expected: 4 })
        );
        let inst = build_d_regular_instance(&complete(5), 6).unwrap();
        assert!(check_regularity(&inst.graph, 6));
    }
}
