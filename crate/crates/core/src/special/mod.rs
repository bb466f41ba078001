//! Degree-raising gadgets, `d`-regular instances, the 4-regular variant of
//! the cubic reduction, and induced embeddings into the 3D grid.

mod degree;
mod embedding;
mod four_regular;

use thiserror::Error;

use crate::cubic::CubicError;
use crate::decomposition::DecompositionError;
use crate::graph::{GraphError, Vertex};

pub use degree::{
    attach_degree_gadget, build_d_regular_instance, lift_through_degree_gadget,
    lift_through_d_regular, DRegularInstance, DegreeGadget,
};
pub use embedding::{
    embed_3d_grid, lift_decomposition_to_subdivision, Coord, EmbeddingError, GridEmbedding,
};
pub use four_regular::{
    attach_pair_gadget, lift_through_pair_gadget, reduce_cutwidth_to_treewidth_4regular,
    FourRegularResult, PairGadget, SMALL_TREE_SIZE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cubic(#[from] CubicError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error("gadget degree must be at least 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("degree {degree} needs a {expected}-regular input")]
    RegularityMismatch { degree: usize, expected: usize },
    #[error("input graph is not cubic")]
    NotCubic,
    #[error("degree-three border vertices admit no perfect matching along the border")]
    NoBorderMatching,
    #[error("no bag contains vertices {0} and {1}")]
    MissingBag(Vertex, Vertex),
}
