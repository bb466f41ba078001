use std::collections::BTreeMap;

use super::CubicError;
use crate::decomposition::TreeDecomposition;
use crate::graph::{contract_low_degree, Graph, MinorWitness, Vertex};
use crate::trace::ReductionTrace;

/// `G4` and how it arose from `G3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step4Instance {
    pub graph: Graph,
    /// Roles of the surviving vertices, inherited from the `G3` trace.
    pub trace: ReductionTrace,
    /// Branch sets of `G4` in `G3`.
    pub witness: MinorWitness,
    /// `G3` vertex -> the `G4` vertex it was merged into.
    pub representative: BTreeMap<Vertex, Vertex>,
}

/// Contracts degree-two vertices to a fixpoint; see [`contract_low_degree`].
pub fn build_g4(g3: &Graph, trace: &ReductionTrace) -> Result<Step4Instance, CubicError> {
    let (graph, witness) = contract_low_degree(g3)?;
    let representative = witness.owner_map();
    let mut surviving = ReductionTrace::new();
    for v in graph.vertices() {
        if let Some(role) = trace.role(v) {
            surviving.record(v, role.clone());
        }
    }
    Ok(Step4Instance { graph, trace: surviving, witness, representative })
}

/// Renames every bag vertex to the vertex it was contracted into.
pub fn map_decomposition_to_g4(inst: &Step4Instance, td: &TreeDecomposition) -> TreeDecomposition {
    let mut out = td.clone();
    let nodes: Vec<_> = td.nodes().collect();
    for x in nodes {
        let bag = td.bag(x).expect("listed node").mapped(|v| inst.representative[&v]);
        out.set_bag(x, bag);
    }
    out
}
