//! Standard manipulations of tree decompositions used when moving
//! certificates between the stages of a reduction.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::decomposition::{
    verify_path_decomposition, verify_tree_decomposition, DecompositionError, NodeId, PathDecomposition, TreeDecomposition,
};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("vertex set is not a clique of the graph")]
    NotAClique,
    #[error("invalid decomposition: {0}")]
    Invalid(#[from] DecompositionError),
    #[error("no bag contains the whole clique")]
    NoCliqueBag,
    #[error("no bag separates the vertex set into halves")]
    NoBalancedBag,
}

/// First node (by id) whose bag contains every vertex of `w`.
pub fn find_clique_bag(
    g: &Graph,
    td: &TreeDecomposition,
    w: &BTreeSet<Vertex>,
) -> Result<NodeId, TransformError> {
    if !g.is_clique(w) {
        return Err(TransformError::NotAClique);
    }
    verify_tree_decomposition(g, td)?;
    first_bag_containing(td, w).ok_or(TransformError::NoCliqueBag)
}

pub(crate) fn first_bag_containing(td: &TreeDecomposition, w: &BTreeSet<Vertex>) -> Option<NodeId> {
    td.bags().find(|(_, b)| b.contains_all(w)).map(|(x, _)| x)
}

/// Which size bound the balanced bag meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BalanceBound {
    /// Every component keeps at most `|W|/2` vertices of `W`.
    HalfOfSet,
    /// Every component keeps at most `n/2` vertices of `W`.
    HalfOfGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancedBag {
    pub node: NodeId,
    pub bound: BalanceBound,
}

/// First node (by id) whose bag splits `g` so that no component keeps more
/// than half of `w`. Falls back to the weaker `n/2` bound when no node meets
/// the `|W|/2` bound.
pub fn find_balanced_bag(
    g: &Graph,
    td: &TreeDecomposition,
    w: &BTreeSet<Vertex>,
) -> Result<BalancedBag, TransformError> {
    verify_tree_decomposition(g, td)?;
    let mut fallback = None;
    for (x, bag) in td.bags() {
        let rest = g.without_vertices(&bag.to_set());
        let worst = rest
            .components()
            .iter()
            .map(|c| c.intersection(w).count())
            .max()
            .unwrap_or(0);
        if 2 * worst <= w.len() {
            return Ok(BalancedBag { node: x, bound: BalanceBound::HalfOfSet });
        }
        if fallback.is_none() && 2 * worst <= g.vertex_count() {
            fallback = Some(x);
        }
    }
    fallback
        .map(|node| BalancedBag { node, bound: BalanceBound::HalfOfGraph })
        .ok_or(TransformError::NoBalancedBag)
}

/// Repeatedly drops a leaf whose bag is contained in its neighbour's bag,
/// smallest node id first, until none is left.
pub fn prune_subsumed_leaves(td: &TreeDecomposition) -> TreeDecomposition {
    let mut out = td.clone();
    loop {
        let victim = out.nodes().find(|&y| {
            out.tree_degree(y) == 1 && {
                let nb = out.tree_neighbors(y).next().unwrap();
                out.bag(y).unwrap().is_subset(out.bag(nb).unwrap())
            }
        });
        match victim {
            Some(y) => {
                out.remove_node(y);
            }
            None => return out,
        }
    }
}

/// Turns a tree decomposition into a path decomposition of no larger width
/// whose first bag contains the clique `a` and whose last bag contains the
/// clique `b`, by deleting every leaf off the path between a bag holding `a`
/// and a bag holding `b`.
pub fn pathify_between_cliques(
    g: &Graph,
    td: &TreeDecomposition,
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
) -> Result<PathDecomposition, TransformError> {
    if !g.is_clique(a) || !g.is_clique(b) {
        return Err(TransformError::NotAClique);
    }
    verify_tree_decomposition(g, td)?;
    let x = first_bag_containing(td, a).ok_or(TransformError::NoCliqueBag)?;
    let y = first_bag_containing(td, b).ok_or(TransformError::NoCliqueBag)?;
    let path = td.tree_path(x, y).expect("verified decomposition tree is connected");
    let pd = restrict_to_path(td, &path);
    // dropping branches is only sound when the cliques cover what they held
    verify_path_decomposition(g, &pd)?;
    Ok(pd)
}

/// Deletes off-path leaves one at a time until only `path` remains, then
/// reads the bags in path order. Each deletion is sound when every vertex of
/// the removed bag also lies in its neighbour, which holds for clique
/// endpoints in a co-bipartite graph.
pub(crate) fn restrict_to_path(td: &TreeDecomposition, path: &[NodeId]) -> PathDecomposition {
    let keep: BTreeSet<NodeId> = path.iter().copied().collect();
    let mut work = td.clone();
    loop {
        let leaf = work
            .nodes()
            .find(|&z| !keep.contains(&z) && work.tree_degree(z) <= 1);
        match leaf {
            Some(z) => {
                work.remove_node(z);
            }
            None => break,
        }
    }
    PathDecomposition::new(path.iter().map(|&x| work.bag(x).unwrap().clone()).collect())
}
