use std::collections::{BTreeMap, BTreeSet};

use super::SpecialError;
use crate::cubic::gadgets::{hang_region, LiftMode};
use crate::cubic::step2::build_walled;
use crate::cubic::{
    build_g1, lift_pathdec_to_g2, ordering_to_g1_pathdec, PipelineConfig, Step1Instance,
    WallKind, COLUMNS_PER_VERTEX, VALIDITY_THRESHOLD,
};
use crate::decomposition::{cutwidth_of_ordering, Bag, LinearOrdering, TreeDecomposition};
use crate::graph::{contract_low_degree, edge, Edge, Graph, GraphError, Vertex};
use crate::trace::{ReductionTrace, Role};
use crate::transform::first_bag_containing;

/// Vertices per tree in the 4-regular variant: a root, two children, and
/// three leaves under each child.
pub const SMALL_TREE_SIZE: usize = 9;
const SMALL_TREE_EDGES: [(usize, usize); 8] =
    [(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7), (2, 8)];
const SMALL_LEAVES: [usize; 6] = [3, 4, 5, 6, 7, 8];
const SMALL_HALVES: [[usize; 4]; 2] = [[1, 3, 4, 5], [2, 6, 7, 8]];

/// `K5` minus the edge `xy`, with `x` joined to `pair.0` and `y` to
/// `pair.1`; the edge `pair` is kept. Raises both endpoint degrees by one and
/// gives every gadget vertex degree 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairGadget {
    pub pair: Edge,
    pub x: Vertex,
    pub y: Vertex,
    pub rest: [Vertex; 3],
}

pub fn attach_pair_gadget(
    g: &Graph,
    v: Vertex,
    w: Vertex,
) -> Result<(Graph, PairGadget), SpecialError> {
    if !g.has_edge(v, w) {
        return Err(GraphError::MissingEdge(v, w).into());
    }
    let base = g.next_free_id();
    let ids: Vec<Vertex> = (base..base + 5).collect();
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
    let pair = edge(v, w);
    out.add_edge(ids[0], pair.0)?;
    out.add_edge(ids[1], pair.1)?;
    Ok((out, PairGadget { pair, x: ids[0], y: ids[1], rest: [ids[2], ids[3], ids[4]] }))
}

/// Hangs `{v, w, x, y}` off a bag holding `v w` and the gadget without its
/// attachments off that; the width becomes `max(width, 4)`.
pub fn lift_through_pair_gadget(
    td: &TreeDecomposition,
    gadget: &PairGadget,
) -> Result<TreeDecomposition, SpecialError> {
    let (v, w) = gadget.pair;
    let anchor = first_bag_containing(td, &BTreeSet::from([v, w])).ok_or(SpecialError::MissingBag(v, w))?;
    let mut out = td.clone();
    let hinge = out.add_node(Bag::from([v, w, gadget.x, gadget.y]));
    out.add_tree_edge(anchor, hinge);
    let body = out.add_node([gadget.x, gadget.y].into_iter().chain(gadget.rest).collect());
    out.add_tree_edge(hinge, body);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourRegularResult {
    pub graph: Graph,
    pub target_width: i64,
    pub certificate: TreeDecomposition,
    pub trace: ReductionTrace,
    /// Degree-three border pairs that received a pair gadget.
    pub border_matching: Vec<Edge>,
    pub pair_gadgets: Vec<PairGadget>,
    pub validity_flag: bool,
}

/// The 4-regular variant of the cubic pipeline: grid walls instead of brick
/// walls, 9-vertex trees whose roots are perfectly matched within `A` and
/// within `B` (consecutive pairs in id order), contraction of degree-two
/// vertices, and a pair gadget on a perfect matching of the remaining
/// degree-three border vertices.
pub fn reduce_cutwidth_to_treewidth_4regular(
    g: &Graph,
    f: &LinearOrdering,
    config: PipelineConfig,
) -> Result<FourRegularResult, SpecialError> {
    let step1 = build_g1(g)?;
    let n = step1.n();
    let k = cutwidth_of_ordering(g, f).map_err(crate::cubic::CubicError::from)?;
    let target_width = (3 * n + k + 2) as i64;
    let cols = config.wall_columns.unwrap_or(COLUMNS_PER_VERTEX * n);
    let step2 = build_walled(&step1, cols, WallKind::Grid)?;
    let pd1 = ordering_to_g1_pathdec(&step1, f)?;
    let pd2 = lift_pathdec_to_g2(&step1, &step2, &pd1)?;

    let (g3, mut trace, trees) = build_small_trees(&step1, &step2.graph, &step2.trace, &step2.a_order, &step2.b_order)?;
    let mut td = pd2.to_tree_decomposition();
    for &v in step1.a_sets.keys() {
        let roots = step1.vertex_clique(v);
        let anchor = first_bag_containing(&td, &roots)
            .ok_or(crate::cubic::CubicError::MissingVertexBag(v))?;
        let region = small_region(&step1, &trees, v);
        let mode = if target_width + 1 >= region.len() as i64 { LiftMode::Strict } else { LiftMode::Compact };
        hang_region(&mut td, &g3, anchor, &roots, &region, mode)?;
    }

    let (mut graph, witness) = contract_low_degree(&g3)?;
    let owner = witness.owner_map();
    let nodes: Vec<_> = td.nodes().collect();
    for x in nodes {
        let bag = td.bag(x).expect("listed node").mapped(|v| owner[&v]);
        td.set_bag(x, bag);
    }
    trace = graph.vertices().filter_map(|v| trace.role(v).map(|r| (v, r.clone()))).fold(
        ReductionTrace::new(),
        |mut t, (v, r)| {
            t.record(v, r);
            t
        },
    );

    let border_matching = border_matching(&graph)?;
    let mut pair_gadgets = Vec::new();
    for &(v, w) in &border_matching {
        let (next, gadget) = attach_pair_gadget(&graph, v, w)?;
        td = lift_through_pair_gadget(&td, &gadget)?;
        for (index, u) in [gadget.x, gadget.y].into_iter().chain(gadget.rest).enumerate() {
            trace.record(u, Role::PairGadget { pair: gadget.pair, index });
        }
        graph = next;
        pair_gadgets.push(gadget);
    }

    Ok(FourRegularResult {
        graph,
        target_width,
        certificate: td,
        trace,
        border_matching,
        pair_gadgets,
        validity_flag: n >= VALIDITY_THRESHOLD && step2.default_dimensions,
    })
}

type SmallTrees = BTreeMap<Vertex, [Vertex; SMALL_TREE_SIZE]>;

/// Same wiring as the cubic step 3 with 9-vertex trees, plus the root
/// matchings inside `A` and inside `B`.
fn build_small_trees(
    step1: &Step1Instance,
    g2: &Graph,
    trace2: &ReductionTrace,
    a_order: &[Vertex],
    b_order: &[Vertex],
) -> Result<(Graph, ReductionTrace, SmallTrees), SpecialError> {
    let mut graph = g2.clone();
    for &a in a_order {
        for &b in b_order {
            graph.remove_edge(a, b);
        }
    }
    let mut trace = trace2.clone();
    let mut trees = SmallTrees::new();
    let mut next = g2.next_free_id();
    for &root in a_order.iter().chain(b_order) {
        let mut nodes = [root; SMALL_TREE_SIZE];
        for (index, slot) in nodes.iter_mut().enumerate().skip(1) {
            *slot = next;
            graph.add_vertex(next);
            trace.record(next, Role::GadgetNode { owner: root, index: index as u8 });
            next += 1;
        }
        for (p, c) in SMALL_TREE_EDGES {
            graph.add_edge(nodes[p], nodes[c])?;
        }
        trees.insert(root, nodes);
    }
    for (&v, copies) in &step1.a_sets {
        for (k, e) in step1.incident_edges(v).into_iter().enumerate() {
            let h = usize::from(v != e.0);
            for (a, &va) in copies.iter().enumerate() {
                for (bi, &eb) in step1.b_sets[&e].iter().enumerate() {
                    let from = trees[&va][SMALL_LEAVES[2 * k + bi]];
                    let to = trees[&eb][SMALL_LEAVES[3 * h + a]];
                    graph.add_edge(from, to)?;
                }
            }
        }
    }
    for side in [a_order, b_order] {
        for pair in side.chunks(2) {
            graph.add_edge(pair[0], pair[1])?;
        }
    }
    Ok((graph, trace, trees))
}

fn small_region(step1: &Step1Instance, trees: &SmallTrees, v: Vertex) -> BTreeSet<Vertex> {
    let mut region: BTreeSet<Vertex> = step1.a_sets[&v].iter().flat_map(|a| trees[a]).collect();
    for e in step1.incident_edges(v) {
        let h = usize::from(v != e.0);
        for eb in step1.b_sets[&e] {
            let t = &trees[&eb];
            region.insert(t[0]);
            region.extend(SMALL_HALVES[h].map(|i| t[i]));
        }
    }
    region
}

/// Perfect matching of the degree-three vertices using edges among them.
/// Each component of the subgraph they induce must be a path with an even
/// number of vertices; it is paired off from its smaller-id end.
fn border_matching(g: &Graph) -> Result<Vec<Edge>, SpecialError> {
    let low: BTreeSet<Vertex> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let induced = g.induced_subgraph(&low);
    let mut out = Vec::new();
    for comp in induced.components() {
        let ends: Vec<Vertex> = comp.iter().copied().filter(|&v| induced.degree(v) <= 1).collect();
        let path_like = comp.iter().all(|&v| induced.degree(v) <= 2) && ends.len() == 2.min(comp.len());
        if !path_like || comp.len() % 2 == 1 {
            return Err(SpecialError::NoBorderMatching);
        }
        let mut walk = vec![ends[0]];
        let mut previous = None;
        while walk.len() < comp.len() {
            let here = *walk.last().expect("nonempty walk");
            let step = induced
                .neighbors(here)
                .find(|&u| Some(u) != previous)
                .ok_or(SpecialError::NoBorderMatching)?;
            previous = Some(here);
            walk.push(step);
        }
        out.extend(walk.chunks(2).map(|p| edge(p[0], p[1])));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::verify_tree_decomposition;
    use crate::generators::complete;
    use crate::graph::check_regularity;
    use crate::solvers::exact_treewidth;

    #[test]
    fn pair_gadget_on_k6() {
        let k6 = complete(6);
        let (g, gadget) = attach_pair_gadget(&k6, 0, 1).unwrap();
        assert_eq!((g.degree(0), g.degree(1)), (6, 6));
        assert_eq!(exact_treewidth(&g, 24).unwrap().width, 5);
        let base = exact_treewidth(&k6, 24).unwrap().certificate;
        let lifted = lift_through_pair_gadget(&base, &gadget).unwrap();
        assert_eq!(verify_tree_decomposition(&g, &lifted), Ok(5));
        assert!(attach_pair_gadget(&crate::generators::path(3), 0, 2).is_err());
    }

    #[test]
    fn k4_small_grid_is_four_regular() {
        let g = complete(4);
        let config = PipelineConfig { wall_columns: Some(4) };
        let r = reduce_cutwidth_to_treewidth_4regular(&g, &LinearOrdering::identity(&g), config).unwrap();
        assert!(check_regularity(&r.graph, 4));
        assert_eq!(verify_tree_decomposition(&r.graph, &r.certificate), Ok(18));
        assert!(!r.validity_flag);
    }
}
