use std::collections::{BTreeMap, BTreeSet};

use super::wall::{brick_wall_pathdec, build_wall_at, BrickWall, WallKind};
use super::{CubicError, Step1Instance};
use crate::decomposition::{verify_path_decomposition, Bag, PathDecomposition};
use crate::graph::{Graph, MinorWitness, Vertex};
use crate::trace::{ReductionTrace, Role, Side};

/// Columns per source vertex in the default wall.
pub const COLUMNS_PER_VERTEX: usize = 24;

/// `G2`: `G1` without the two clique edge sets, plus a left wall whose last
/// column is matched to `A` and a right wall whose first column is matched
/// to `B`. Row `i` is matched to the `i`-th vertex of `A` (resp. `B`) in id
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step2Instance {
    pub graph: Graph,
    pub trace: ReductionTrace,
    pub left: BrickWall,
    pub right: BrickWall,
    pub a_order: Vec<Vertex>,
    pub b_order: Vec<Vertex>,
    /// Walls have the default `3n x 24n` shape.
    pub default_dimensions: bool,
}

pub fn build_g2(inst: &Step1Instance) -> Step2Instance {
    build_g2_with_columns(inst, COLUMNS_PER_VERTEX * inst.n())
        .expect("default wall dimensions are valid")
}

pub fn build_g2_with_columns(inst: &Step1Instance, cols: usize) -> Result<Step2Instance, CubicError> {
    build_walled(inst, cols, WallKind::Brick)
}

pub(crate) fn build_walled(
    inst: &Step1Instance,
    cols: usize,
    kind: WallKind,
) -> Result<Step2Instance, CubicError> {
    let n = inst.n();
    let rows = 3 * n;
    let a_order: Vec<Vertex> = inst.a().into_iter().collect();
    let b_order: Vec<Vertex> = inst.b().into_iter().collect();
    debug_assert_eq!(b_order.len(), rows);
    let base = inst.graph.next_free_id();
    let left = build_wall_at(rows, cols, base, kind)?;
    let right = build_wall_at(rows, cols, base + rows * cols, kind)?;

    let mut graph = inst.graph.clone();
    for side in [&a_order, &b_order] {
        for (i, &u) in side.iter().enumerate() {
            for &w in &side[i + 1..] {
                graph.remove_edge(u, w);
            }
        }
    }
    let mut trace = inst.trace.clone();
    for (wall, tag) in [(&left, Side::Left), (&right, Side::Right)] {
        for v in wall.graph.vertices() {
            graph.add_vertex(v);
            let (row, col) = wall.coords[&v];
            trace.record(v, Role::WallCell { side: tag, row, col });
        }
        for (u, v) in wall.graph.edges() {
            graph.add_edge(u, v)?;
        }
    }
    for i in 0..rows {
        graph.add_edge(left.vertex(i, cols - 1), a_order[i])?;
        graph.add_edge(right.vertex(i, 0), b_order[i])?;
    }
    Ok(Step2Instance {
        graph,
        trace,
        left,
        right,
        a_order,
        b_order,
        default_dimensions: cols == COLUMNS_PER_VERTEX * n,
    })
}

/// Left wall sweep, a hand-over from the last wall column to `A`, the bags
/// of `pd`, a hand-over from `B` to the first column of the right wall, and
/// the right wall sweep. The hand-over bags have `3n + 1` vertices, so the
/// width is `max(width(pd), 3n)`.
pub fn lift_pathdec_to_g2(
    inst1: &Step1Instance,
    inst2: &Step2Instance,
    pd: &PathDecomposition,
) -> Result<PathDecomposition, CubicError> {
    verify_path_decomposition(&inst1.graph, pd)?;
    let a: BTreeSet<Vertex> = inst2.a_order.iter().copied().collect();
    let b: BTreeSet<Vertex> = inst2.b_order.iter().copied().collect();
    let endpoints_ok = pd.bags.first().is_some_and(|x| x.contains_all(&a))
        && pd.bags.last().is_some_and(|x| x.contains_all(&b));
    if !endpoints_ok {
        return Err(CubicError::EndpointBags);
    }
    let rows = inst2.left.rows;
    let wall_col = inst2.left.column(inst2.left.cols - 1);
    let right_col = inst2.right.column(0);

    let mut bags = brick_wall_pathdec(&inst2.left).bags;
    for i in 0..rows {
        let bag: Bag = inst2.a_order[..=i].iter().chain(&wall_col[i..]).copied().collect();
        bags.push(bag);
    }
    bags.extend(pd.bags.iter().cloned());
    for i in 0..rows {
        let bag: Bag = inst2.b_order[i..].iter().chain(&right_col[..=i]).copied().collect();
        bags.push(bag);
    }
    bags.extend(brick_wall_pathdec(&inst2.right).bags);
    Ok(PathDecomposition::new(bags))
}

/// `G2` with a clique on the middle column of each wall, and a witness that
/// `G1` is a minor of it: the branch set of the `i`-th vertex of `A` (resp.
/// `B`) is that vertex together with row `i` of the left (resp. right) wall.
pub fn row_contraction_witness(
    inst1: &Step1Instance,
    inst2: &Step2Instance,
) -> (Graph, MinorWitness) {
    let mut host = inst2.graph.clone();
    for wall in [&inst2.left, &inst2.right] {
        let col = wall.column(wall.cols / 2);
        for (i, &u) in col.iter().enumerate() {
            for &w in &col[i + 1..] {
                host.add_edge(u, w).expect("wall vertices exist");
            }
        }
    }
    let mut branch_sets = BTreeMap::new();
    for (wall, order) in [(&inst2.left, &inst2.a_order), (&inst2.right, &inst2.b_order)] {
        for (i, &x) in order.iter().enumerate() {
            let set: BTreeSet<Vertex> = wall.row(i).into_iter().chain([x]).collect();
            branch_sets.insert(x, set);
        }
    }
    debug_assert_eq!(branch_sets.len(), inst1.graph.vertex_count());
    (host, MinorWitness::new(branch_sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::{build_g1, ordering_to_g1_pathdec};
    use crate::decomposition::LinearOrdering;
    use crate::generators::complete;
    use crate::graph::verify_minor_witness;

    #[test]
    fn k4_default_walls() {
        let g = complete(4);
        let inst1 = build_g1(&g).unwrap();
        let inst2 = build_g2(&inst1);
        assert_eq!(inst2.graph.vertex_count(), 2328);
        assert!(inst2.default_dimensions);
        for v in inst1.graph.vertices() {
            assert_eq!(inst2.graph.degree(v), 7);
        }
        let pd1 = ordering_to_g1_pathdec(&inst1, &LinearOrdering::identity(&g)).unwrap();
        let pd2 = lift_pathdec_to_g2(&inst1, &inst2, &pd1).unwrap();
        assert_eq!(verify_path_decomposition(&inst2.graph, &pd2), Ok(18));

        let (host, witness) = row_contraction_witness(&inst1, &inst2);
        assert_eq!(verify_minor_witness(&host, &inst1.graph, &witness), Ok(true));
        assert_eq!(verify_minor_witness(&inst2.graph, &inst1.graph, &witness), Ok(false));
    }

    #[test]
    fn lift_rejects_wrong_endpoints() {
        let g = complete(4);
        let inst1 = build_g1(&g).unwrap();
        let inst2 = build_g2_with_columns(&inst1, 3).unwrap();
        assert!(!inst2.default_dimensions);
        let mut pd1 = ordering_to_g1_pathdec(&inst1, &LinearOrdering::identity(&g)).unwrap();
        pd1.bags.reverse();
        assert_eq!(lift_pathdec_to_g2(&inst1, &inst2, &pd1), Err(CubicError::EndpointBags));
    }
}
