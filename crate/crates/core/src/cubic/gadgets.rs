use std::collections::{BTreeMap, BTreeSet};

use super::{CubicError, Step1Instance, Step2Instance};
use crate::decomposition::{
    verify_path_decomposition, NodeId, PathDecomposition, TreeDecomposition,
};
use crate::graph::{Graph, MinorWitness, Vertex};
use crate::trace::{ReductionTrace, Role};
use crate::transform::first_bag_containing;

/// Vertices per gadget tree.
pub const GADGET_SIZE: usize = 11;
/// Node indices of the six leaves, in wiring order.
pub const GADGET_LEAVES: [usize; 6] = [3, 5, 6, 7, 9, 10];
/// Smallest width at which the leaf bags of the strict lift fit.
pub const STRICT_LIFT_MIN_WIDTH: i64 = 68;

/// Root 0 has children 1 and 2. Child `1 + h` has a leaf and an inner node,
/// and the inner node has two leaves; the subtree of `1 + h` is half `h`.
const TREE_EDGES: [(usize, usize); 10] =
    [(0, 1), (0, 2), (1, 3), (1, 4), (4, 5), (4, 6), (2, 7), (2, 8), (8, 9), (8, 10)];
const HALVES: [[usize; 5]; 2] = [[1, 3, 4, 5, 6], [2, 7, 8, 9, 10]];

/// The tree replacing one vertex of `A` or `B`; `nodes[0]` is the root and
/// keeps the id of the replaced vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetTree {
    pub nodes: [Vertex; GADGET_SIZE],
}

impl GadgetTree {
    pub fn root(&self) -> Vertex {
        self.nodes[0]
    }

    pub fn leaves(&self) -> [Vertex; 6] {
        GADGET_LEAVES.map(|i| self.nodes[i])
    }

    /// Child `1 + h` and its descendants.
    pub fn half(&self, h: usize) -> [Vertex; 5] {
        HALVES[h].map(|i| self.nodes[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step3Instance {
    pub graph: Graph,
    pub trace: ReductionTrace,
    /// Keyed by root id.
    pub trees: BTreeMap<Vertex, GadgetTree>,
}

/// How the per-vertex leaf bags are formed when lifting to `G3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftMode {
    /// One 69-vertex bag per source vertex; rejects inputs of width < 68.
    Strict,
    /// Same bags as `Strict` but accepts any input width; the result then has
    /// width `max(width, 68)`.
    Relaxed,
    /// Replaces each 69-vertex bag by a small decomposition of the same
    /// region, hung off the bag that holds the region's nine roots.
    Compact,
}

/// Replaces every vertex of `A` and `B` by an 11-vertex tree.
///
/// Other tree nodes get fresh ids from `|V(G2)|` on, ten per tree, trees in
/// root id order. Leaf `2k + b` of the tree of `v^a` is joined to leaf
/// `3h + a` of the tree of `e^b`, where `e` is the `k`-th edge at `v` in
/// sorted order and `h` is 0 when `v` is the smaller endpoint of `e`.
pub fn build_g3(inst1: &Step1Instance, inst2: &Step2Instance) -> Step3Instance {
    let mut graph = inst2.graph.clone();
    let b: BTreeSet<Vertex> = inst1.b();
    for &a in &inst2.a_order {
        for &x in &b {
            graph.remove_edge(a, x);
        }
    }
    let mut trace = inst2.trace.clone();
    let mut trees = BTreeMap::new();
    let mut next = inst2.graph.next_free_id();
    for &root in inst2.a_order.iter().chain(&inst2.b_order) {
        let mut nodes = [root; GADGET_SIZE];
        for (index, slot) in nodes.iter_mut().enumerate().skip(1) {
            *slot = next;
            graph.add_vertex(next);
            trace.record(next, Role::GadgetNode { owner: root, index: index as u8 });
            next += 1;
        }
        for (p, c) in TREE_EDGES {
            graph.add_edge(nodes[p], nodes[c]).expect("fresh tree vertices");
        }
        trees.insert(root, GadgetTree { nodes });
    }
    for (&v, copies) in &inst1.a_sets {
        for (k, e) in inst1.incident_edges(v).into_iter().enumerate() {
            let h = usize::from(v != e.0);
            for (a, &va) in copies.iter().enumerate() {
                for (bi, &eb) in inst1.b_sets[&e].iter().enumerate() {
                    let from = trees[&va].leaves()[2 * k + bi];
                    let to = trees[&eb].leaves()[3 * h + a];
                    graph.add_edge(from, to).expect("leaf vertices exist");
                }
            }
        }
    }
    Step3Instance { graph, trace, trees }
}

/// Branch sets contracting each gadget tree onto its root; every other `G2`
/// vertex is its own branch set.
pub fn gadget_contraction_witness(inst2: &Step2Instance, inst3: &Step3Instance) -> MinorWitness {
    let branch_sets = inst2
        .graph
        .vertices()
        .map(|v| {
            let set = match inst3.trees.get(&v) {
                Some(t) => t.nodes.iter().copied().collect(),
                None => BTreeSet::from([v]),
            };
            (v, set)
        })
        .collect();
    MinorWitness::new(branch_sets)
}

/// Everything the leaf bag of source vertex `v` must hold: the three trees
/// of `v^1..3` and, for every edge `e` at `v` and both copies, the root of
/// `e^b` with its `v`-side half.
fn vertex_region(inst1: &Step1Instance, inst3: &Step3Instance, v: Vertex) -> BTreeSet<Vertex> {
    let mut region: BTreeSet<Vertex> = inst1.a_sets[&v]
        .iter()
        .flat_map(|a| inst3.trees[a].nodes)
        .collect();
    for e in inst1.incident_edges(v) {
        let h = usize::from(v != e.0);
        for eb in inst1.b_sets[&e] {
            let t = &inst3.trees[&eb];
            region.insert(t.root());
            region.extend(t.half(h));
        }
    }
    region
}

/// Keeps the bags of `pd` (the roots carry the ids of the vertices they
/// replace) and attaches, for each source vertex, a leaf bag covering its
/// gadget region to the first bag that holds its nine roots.
pub fn lift_decomposition_to_g3(
    inst1: &Step1Instance,
    inst2: &Step2Instance,
    inst3: &Step3Instance,
    pd: &PathDecomposition,
    mode: LiftMode,
) -> Result<TreeDecomposition, CubicError> {
    let width = verify_path_decomposition(&inst2.graph, pd)?;
    if mode == LiftMode::Strict && width < STRICT_LIFT_MIN_WIDTH {
        return Err(CubicError::WidthTooSmall { width, required: STRICT_LIFT_MIN_WIDTH });
    }
    let mut td = pd.to_tree_decomposition();
    for &v in inst1.a_sets.keys() {
        let roots = inst1.vertex_clique(v);
        let anchor = first_bag_containing(&td, &roots).ok_or(CubicError::MissingVertexBag(v))?;
        let region = vertex_region(inst1, inst3, v);
        hang_region(&mut td, &inst3.graph, anchor, &roots, &region, mode)?;
    }
    Ok(td)
}

/// Attaches a decomposition of `region` to node `anchor`, whose bag must hold
/// `roots`. `Strict` and `Relaxed` use the whole region as one bag; `Compact`
/// decomposes the region (with `roots` made a clique and eliminated last) by
/// minimum-degree elimination and attaches the bag holding `roots`.
pub(crate) fn hang_region(
    td: &mut TreeDecomposition,
    graph: &Graph,
    anchor: NodeId,
    roots: &BTreeSet<Vertex>,
    region: &BTreeSet<Vertex>,
    mode: LiftMode,
) -> Result<(), CubicError> {
    match mode {
        LiftMode::Strict | LiftMode::Relaxed => {
            let x = td.add_node(region.iter().copied().collect());
            td.add_tree_edge(anchor, x);
        }
        LiftMode::Compact => {
            let mut local_graph = graph.induced_subgraph(region);
            for &r in roots {
                for &s in roots.range(r + 1..) {
                    local_graph.add_edge(r, s)?;
                }
            }
            let order = min_degree_order(&local_graph, roots);
            let local = TreeDecomposition::from_elimination_ordering(&local_graph, &order);
            let hub = first_bag_containing(&local, roots).expect("roots are eliminated last");
            let ids = graft(td, &local);
            td.add_tree_edge(anchor, ids[&hub]);
        }
    }
    Ok(())
}

/// Copies every node and tree edge of `part` into `td`, returning the id map.
fn graft(td: &mut TreeDecomposition, part: &TreeDecomposition) -> BTreeMap<NodeId, NodeId> {
    let ids: BTreeMap<NodeId, NodeId> = part
        .bags()
        .map(|(x, bag)| (x, td.add_node(bag.clone())))
        .collect();
    for (x, y) in part.tree_edges() {
        td.add_tree_edge(ids[&x], ids[&y]);
    }
    ids
}

/// Greedy minimum-degree elimination (smallest id on ties) of every vertex
/// outside `last`, followed by `last` in id order.
fn min_degree_order(g: &Graph, last: &BTreeSet<Vertex>) -> Vec<Vertex> {
    let mut work = g.clone();
    let mut order = Vec::with_capacity(g.vertex_count());
    while let Some(v) = work
        .vertices()
        .filter(|v| !last.contains(v))
        .min_by_key(|&v| (work.degree(v), v))
    {
        let nbrs: Vec<Vertex> = work.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                work.add_edge(a, b).expect("neighbours exist");
            }
        }
        work.remove_vertex(v);
        order.push(v);
    }
    order.extend(last.iter().copied());
    order
}
