//! Undirected simple graphs with stable integer vertex ids, plus the
//! structural operations the reductions are built from.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(Vertex, Vertex),
    #[error("vertex {0} is isolated and cannot be contracted into a neighbour")]
    IsolatedVertex(Vertex),
    #[error("vertex {vertex} has degree {degree}; only degree 1 or 2 can be contracted")]
    DegreeTooHigh { vertex: Vertex, degree: usize },
    #[error("minor witness refers to unknown vertex {0}")]
    WitnessUnknownVertex(Vertex),
}

/// Undirected simple graph. Vertex ids need not be contiguous: contractions
/// drop ids and constructions allocate fresh ones above the current maximum.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Inserts `{u, v}`; returns false if the edge was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adj.contains_key(&u) {
            return Err(GraphError::UnknownVertex(u));
        }
        if !self.adj.contains_key(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let removed = self.adj.get_mut(&u).is_some_and(|n| n.remove(&v));
        if removed {
            self.adj.get_mut(&v).unwrap().remove(&u);
        }
        removed
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        match self.adj.remove(&v) {
            Some(nbrs) => {
                for u in nbrs {
                    self.adj.get_mut(&u).unwrap().remove(&v);
                }
                true
            }
            None => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Edges in lexicographic order of their (sorted) endpoints.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Neighbours of `v`; empty for unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Smallest id strictly above every vertex currently present.
    pub fn next_free_id(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    pub fn is_clique(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter().all(|&u| {
            self.has_vertex(u) && set.iter().all(|&v| u == v || self.has_edge(u, v))
        })
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.intersection(keep).copied().collect()))
            .collect();
        Graph { adj }
    }

    pub fn without_vertices(&self, drop: &BTreeSet<Vertex>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| !drop.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.difference(drop).copied().collect()))
            .collect();
        Graph { adj }
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Merges `v` into its smallest-id neighbour. The neighbour keeps its id,
    /// `v` disappears, and any parallel edge that would arise is dropped.
    pub fn contract_into_neighbor(&self, v: Vertex) -> Result<Graph, GraphError> {
        let target = self.contraction_target(v)?;
        let mut g = self.clone();
        g.merge_into(v, target);
        Ok(g)
    }

    pub(crate) fn contraction_target(&self, v: Vertex) -> Result<Vertex, GraphError> {
        let nbrs = self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))?;
        match nbrs.len() {
            0 => Err(GraphError::IsolatedVertex(v)),
            1 | 2 => Ok(*nbrs.iter().next().unwrap()),
            degree => Err(GraphError::DegreeTooHigh { vertex: v, degree }),
        }
    }

    /// In-place edge contraction of `v` into its neighbour `target`.
    pub(crate) fn merge_into(&mut self, v: Vertex, target: Vertex) {
        let nbrs = self.adj.remove(&v).unwrap_or_default();
        for u in nbrs {
            let set = self.adj.get_mut(&u).unwrap();
            set.remove(&v);
            if u != target {
                set.insert(target);
                self.adj.get_mut(&target).unwrap().insert(u);
            }
        }
    }

    /// Replaces `{u, v}` by the path `u - x - v` for a fresh vertex `x`,
    /// which is returned alongside the new graph.
    pub fn subdivide_edge(&self, u: Vertex, v: Vertex) -> Result<(Graph, Vertex), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let x = self.next_free_id();
        let mut g = self.clone();
        g.remove_edge(u, v);
        g.add_vertex(x);
        g.add_edge(u, x)?;
        g.add_edge(x, v)?;
        Ok((g, x))
    }

    /// Copy of the graph with vertices renamed `0..n` in increasing id order,
    /// together with the old id of each new vertex.
    pub fn relabeled(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, Vertex> = old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = self
            .adj
            .iter()
            .map(|(v, nbrs)| (index[v], nbrs.iter().map(|u| index[u]).collect()))
            .collect();
        (Graph { adj }, old)
    }
}

pub fn check_regularity(g: &Graph, d: usize) -> bool {
    g.vertices().all(|v| g.degree(v) == d)
}

/// Branch sets witnessing that one graph is a minor of another.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl MinorWitness {
    pub fn new(branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>>) -> Self {
        Self { branch_sets }
    }

    /// Host vertex -> minor vertex owning it.
    pub fn owner_map(&self) -> BTreeMap<Vertex, Vertex> {
        self.branch_sets
            .iter()
            .flat_map(|(&m, set)| set.iter().map(move |&h| (h, m)))
            .collect()
    }

    /// Given `self` witnessing `M <= H` and `inner` witnessing `H <= K`,
    /// returns the witness of `M <= K`. Host vertices of `self` missing from
    /// `inner` contribute nothing.
    pub fn compose(&self, inner: &MinorWitness) -> MinorWitness {
        let branch_sets = self
            .branch_sets
            .iter()
            .map(|(&m, set)| {
                let expanded = set
                    .iter()
                    .filter_map(|h| inner.branch_sets.get(h))
                    .flatten()
                    .copied()
                    .collect();
                (m, expanded)
            })
            .collect();
        MinorWitness { branch_sets }
    }
}

/// True iff the branch sets are nonempty, pairwise disjoint, each connected in
/// `host`, cover every vertex of `minor`, and every edge of `minor` is
/// realised by some host edge between the corresponding branch sets.
pub fn verify_minor_witness(
    host: &Graph,
    minor: &Graph,
    witness: &MinorWitness,
) -> Result<bool, GraphError> {
    for (&m, set) in &witness.branch_sets {
        if !minor.has_vertex(m) {
            return Err(GraphError::WitnessUnknownVertex(m));
        }
        if let Some(&h) = set.iter().find(|&&h| !host.has_vertex(h)) {
            return Err(GraphError::WitnessUnknownVertex(h));
        }
    }
    if minor.vertices().any(|m| {
        witness
            .branch_sets
            .get(&m)
            .is_none_or(BTreeSet::is_empty)
    }) {
        return Ok(false);
    }
    let owner = witness.owner_map();
    let total: usize = witness.branch_sets.values().map(BTreeSet::len).sum();
    if owner.len() != total {
        return Ok(false);
    }
    for set in witness.branch_sets.values() {
        if !host.induced_subgraph(set).is_connected() {
            return Ok(false);
        }
    }
    let mut realised = BTreeSet::new();
    for (a, b) in host.edges() {
        if let (Some(&ma), Some(&mb)) = (owner.get(&a), owner.get(&b)) {
            if ma != mb {
                realised.insert(edge(ma, mb));
            }
        }
    }
    Ok(minor.edges().all(|e| realised.contains(&e)))
}

/// Contracts a vertex of degree at most two into its smallest-id neighbour,
/// always the smallest such vertex first, until every vertex has degree at
/// least three. Returns the result with the branch set of each survivor.
pub fn contract_low_degree(g: &Graph) -> Result<(Graph, MinorWitness), GraphError> {
    let mut graph = g.clone();
    let mut branch: BTreeMap<Vertex, BTreeSet<Vertex>> =
        graph.vertices().map(|v| (v, BTreeSet::from([v]))).collect();
    let mut pending: BTreeSet<Vertex> = graph.vertices().filter(|&v| graph.degree(v) <= 2).collect();
    while let Some(v) = pending.pop_first() {
        if !graph.has_vertex(v) || graph.degree(v) > 2 {
            continue;
        }
        let target = graph.contraction_target(v)?;
        let touched: Vec<Vertex> = graph.neighbors(v).collect();
        graph.merge_into(v, target);
        let merged = branch.remove(&v).expect("live vertex has a branch set");
        branch.get_mut(&target).expect("live target").extend(merged);
        pending.extend(touched.into_iter().filter(|&u| graph.degree(u) <= 2));
    }
    Ok((graph, MinorWitness::new(branch)))
}

/// Backtracking isomorphism test; intended for small graphs.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let av: Vec<Vertex> = a.vertices().collect();
    let bv: Vec<Vertex> = b.vertices().collect();
    let mut map: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut used: BTreeSet<Vertex> = BTreeSet::new();
    extend_isomorphism(a, b, &av, &bv, &mut map, &mut used)
}

fn extend_isomorphism(
    a: &Graph,
    b: &Graph,
    av: &[Vertex],
    bv: &[Vertex],
    map: &mut BTreeMap<Vertex, Vertex>,
    used: &mut BTreeSet<Vertex>,
) -> bool {
    let Some(&v) = av.get(map.len()) else {
        return true;
    };
    for &w in bv {
        if used.contains(&w) || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = map
            .iter()
            .all(|(&x, &y)| a.has_edge(v, x) == b.has_edge(w, y));
        if !consistent {
            continue;
        }
        map.insert(v, w);
        used.insert(w);
        if extend_isomorphism(a, b, av, bv, map, used) {
            return true;
        }
        map.remove(&v);
        used.remove(&w);
    }
    false
}
