//! Bookkeeping that maps vertices of a constructed graph back to what they
//! stand for in the source instance.

use std::collections::BTreeMap;

use crate::graph::{Edge, Vertex};

/// Left or right brick wall (or grid) of the wall construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    /// The unprimed copy `v` in the co-bipartite construction.
    Original(Vertex),
    /// The primed copy `v'` in the co-bipartite construction.
    Primed(Vertex),
    /// `v^copy` of the vertex clique, `copy` in `1..=3`.
    VertexCopy { vertex: Vertex, copy: u8 },
    /// `e^copy` of the edge clique, `copy` in `1..=2`.
    EdgeCopy { edge: Edge, copy: u8 },
    WallCell { side: Side, row: usize, col: usize },
    /// Non-root node of the tree that replaced vertex `owner` of the
    /// previous stage; `index` numbers the tree nodes in allocation order.
    GadgetNode { owner: Vertex, index: u8 },
    /// Vertex of a degree-raising clique gadget hung off `anchor`.
    DegreeGadget { anchor: Vertex, index: usize },
    /// Vertex of an edge gadget raising the degree of both ends of `pair`.
    PairGadget { pair: Edge, index: usize },
    /// Branch vertex of a subdivision.
    Branch(Vertex),
    /// Subdivision vertex on the path realising `edge`.
    Subdivision { edge: Edge, index: usize },
    /// Survivor of the degree-two contraction phase; the set of merged
    /// vertices lives in the accompanying minor witness.
    Merged(Vertex),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    roles: BTreeMap<Vertex, Role>,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, v: Vertex, role: Role) {
        self.roles.insert(v, role);
    }

    pub fn role(&self, v: Vertex) -> Option<&Role> {
        self.roles.get(&v)
    }

    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &Role)> + '_ {
        self.roles.iter().map(|(&v, r)| (v, r))
    }

    pub fn vertices_with<'a>(
        &'a self,
        pred: impl Fn(&Role) -> bool + 'a,
    ) -> impl Iterator<Item = Vertex> + 'a {
        self.roles
            .iter()
            .filter(move |(_, r)| pred(r))
            .map(|(&v, _)| v)
    }
}
