//! Cutwidth on cubic graphs to treewidth on cubic graphs, in four steps:
//!
//! 1. `G1`: vertex triples and edge pairs joined into two cliques.
//! 2. `G2`: the cliques are dropped and two brick walls are matched to them.
//! 3. `G3`: every clique vertex becomes an 11-vertex tree, making it subcubic.
//! 4. `G4`: degree-two vertices are contracted away, leaving a cubic graph.
//!
//! Each step carries a certificate lift so that an ordering of the source
//! graph turns into a tree decomposition of `G4` of width `3n + k + 2`.

mod contraction;
pub(crate) mod gadgets;
mod pipeline;
mod step1;
pub(crate) mod step2;
mod wall;

use thiserror::Error;

use crate::decomposition::{DecompositionError, OrderingError};
use crate::graph::{GraphError, Vertex};
use crate::transform::TransformError;

pub use contraction::{build_g4, map_decomposition_to_g4, Step4Instance};
pub use gadgets::{
    build_g3, gadget_contraction_witness, lift_decomposition_to_g3, GadgetTree, LiftMode,
    Step3Instance, GADGET_LEAVES, GADGET_SIZE, STRICT_LIFT_MIN_WIDTH,
};
pub use pipeline::{
    reduce_cutwidth_to_treewidth, reduce_cutwidth_to_treewidth_with, PipelineConfig,
    PipelineResult, PipelineStages, VALIDITY_THRESHOLD,
};
pub use step1::{build_g1, g1_decomposition_to_ordering, ordering_to_g1_pathdec, Step1Instance};
pub use step2::{
    build_g2, build_g2_with_columns, lift_pathdec_to_g2, row_contraction_witness, Step2Instance,
    COLUMNS_PER_VERTEX,
};
pub use wall::{brick_wall_pathdec, build_brick_wall, build_grid_wall, BrickWall, WallKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error("input graph is not cubic")]
    NotCubic,
    #[error("wall needs at least two rows and two columns, got {rows}x{cols}")]
    DegenerateWall { rows: usize, cols: usize },
    #[error(transparent)]
    Ordering(#[from] OrderingError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("first bag must contain A and last bag must contain B")]
    EndpointBags,
    #[error("decomposition width {width} is below the required {required}")]
    WidthTooSmall { width: i64, required: i64 },
    #[error("no bag holds the copies of vertex {0} together with its edge copies")]
    MissingVertexBag(Vertex),
}
