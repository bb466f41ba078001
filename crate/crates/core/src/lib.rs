//! Constructive treewidth hardness reductions.
//!
//! The crate builds the instances of two reductions (pathwidth to treewidth
//! on co-bipartite graphs, and cutwidth to treewidth on cubic graphs), lifts
//! width certificates through every construction step, and ships exact
//! solvers small enough to check the width identities by brute force.

pub mod catalog;
pub mod cobipartite;
pub mod cubic;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod solvers;
pub mod special;
pub mod trace;
pub mod transform;

pub use decomposition::{
    cutwidth_of_ordering, vertex_separation_of_ordering, verify_path_decomposition,
    verify_tree_decomposition, Bag, DecompositionError, LinearOrdering, NodeId, OrderingError,
    PathDecomposition, TreeDecomposition,
};
pub use graph::{
    check_regularity, contract_low_degree, is_isomorphic, verify_minor_witness, Edge, Graph,
    GraphError, MinorWitness, Vertex,
};
pub use solvers::{exact_cutwidth, exact_pathwidth, exact_treewidth, SolveError, SolveResult};
pub use trace::{ReductionTrace, Role};
