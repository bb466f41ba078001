//! Width certificates (tree decompositions, path decompositions, linear
//! orderings) and their verifiers.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type NodeId = usize;

/// A sorted, duplicate-free set of vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bag(Vec<Vertex>);

impl Bag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn is_subset(&self, other: &Bag) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn contains_all<'a>(&self, vs: impl IntoIterator<Item = &'a Vertex>) -> bool {
        vs.into_iter().all(|&v| self.contains(v))
    }

    pub fn to_set(&self) -> BTreeSet<Vertex> {
        self.0.iter().copied().collect()
    }

    /// Bag with every vertex passed through `f` (duplicates collapse).
    pub fn mapped(&self, f: impl Fn(Vertex) -> Vertex) -> Bag {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Vertex> for Bag {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Bag(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for Bag {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

fn width_of<'a>(bags: impl Iterator<Item = &'a Bag>) -> i64 {
    bags.map(|b| b.len() as i64 - 1).max().unwrap_or(-1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("node {node} bag holds vertex {vertex}, which is not in the graph")]
    UnknownVertex { node: NodeId, vertex: Vertex },
    #[error("tree edge refers to missing node {0}")]
    UnknownNode(NodeId),
    #[error("decomposition tree is not a tree ({nodes} nodes, {edges} edges, connected: {connected})")]
    NotATree { nodes: usize, edges: usize, connected: bool },
    #[error("decomposition has no nodes but the graph is nonempty")]
    NoNodes,
    #[error("vertex axiom violated: vertex {0} is in no bag")]
    VertexUncovered(Vertex),
    #[error("edge axiom violated: no bag contains both {0} and {1}")]
    EdgeUncovered(Vertex, Vertex),
    #[error("connectivity axiom violated: nodes containing vertex {0} are not connected")]
    DisconnectedOccurrence(Vertex),
    #[error("decomposition tree is not a path")]
    NotAPath,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
}

/// A tree of bags over node ids. Node ids are stable under node removal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: BTreeMap<NodeId, Bag>,
    adj: BTreeMap<NodeId, BTreeSet<NodeId>>,
}

impl TreeDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, bag: Bag) -> NodeId {
        let id = self.bags.keys().next_back().map_or(0, |&x| x + 1);
        self.bags.insert(id, bag);
        self.adj.insert(id, BTreeSet::new());
        id
    }

    pub fn add_tree_edge(&mut self, a: NodeId, b: NodeId) {
        assert!(self.bags.contains_key(&a) && self.bags.contains_key(&b) && a != b);
        self.adj.get_mut(&a).unwrap().insert(b);
        self.adj.get_mut(&b).unwrap().insert(a);
    }

    pub fn remove_node(&mut self, x: NodeId) -> Option<Bag> {
        let bag = self.bags.remove(&x)?;
        for y in self.adj.remove(&x).unwrap_or_default() {
            self.adj.get_mut(&y).unwrap().remove(&x);
        }
        Some(bag)
    }

    pub fn bag(&self, x: NodeId) -> Option<&Bag> {
        self.bags.get(&x)
    }

    pub fn set_bag(&mut self, x: NodeId, bag: Bag) {
        if let Some(slot) = self.bags.get_mut(&x) {
            *slot = bag;
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.bags.keys().copied()
    }

    pub fn bags(&self) -> impl Iterator<Item = (NodeId, &Bag)> + '_ {
        self.bags.iter().map(|(&x, b)| (x, b))
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn tree_neighbors(&self, x: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.adj.get(&x).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn tree_degree(&self, x: NodeId) -> usize {
        self.adj.get(&x).map_or(0, BTreeSet::len)
    }

    pub fn tree_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&a, s)| s.range(a + 1..).map(move |&b| (a, b)))
    }

    pub fn width(&self) -> i64 {
        width_of(self.bags.values())
    }

    /// Nodes on the unique tree path from `from` to `to`, inclusive.
    pub fn tree_path(&self, from: NodeId, to: NodeId) -> Option<Vec<NodeId>> {
        let mut parent: HashMap<NodeId, NodeId> = HashMap::new();
        let mut queue = VecDeque::from([from]);
        parent.insert(from, from);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for y in self.tree_neighbors(x) {
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(y) {
                    e.insert(x);
                    queue.push_back(y);
                }
            }
        }
        if !parent.contains_key(&to) {
            return None;
        }
        let mut path = vec![to];
        let mut x = to;
        while x != from {
            x = parent[&x];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }

    /// Reads the decomposition as a path decomposition, starting from the
    /// smaller-id endpoint, if its tree is a path.
    pub fn as_path(&self) -> Option<PathDecomposition> {
        if self.bags.is_empty() {
            return Some(PathDecomposition::default());
        }
        if self.adj.values().any(|s| s.len() > 2) {
            return None;
        }
        let start = self.nodes().find(|&x| self.tree_degree(x) <= 1)?;
        let mut order = vec![start];
        let mut prev = None;
        let mut cur = start;
        loop {
            let next = self.tree_neighbors(cur).find(|&y| Some(y) != prev);
            match next {
                Some(y) => {
                    prev = Some(cur);
                    cur = y;
                    order.push(y);
                }
                None => break,
            }
        }
        if order.len() != self.bags.len() {
            return None;
        }
        Some(PathDecomposition::new(
            order.into_iter().map(|x| self.bags[&x].clone()).collect(),
        ))
    }

    /// Tree decomposition from an elimination ordering: the bag of `v` is `v`
    /// together with its later neighbours in the filled graph, attached to
    /// the bag of the earliest of those neighbours.
    pub fn from_elimination_ordering(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
        let pos: HashMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut fill: HashMap<Vertex, BTreeSet<Vertex>> = g
            .vertices()
            .map(|v| (v, g.neighbors(v).collect()))
            .collect();
        let mut td = TreeDecomposition::new();
        let mut node_of: HashMap<Vertex, NodeId> = HashMap::new();
        let mut attach: Vec<(Vertex, Option<Vertex>)> = Vec::with_capacity(order.len());
        for &v in order {
            let later: Vec<Vertex> = fill[&v]
                .iter()
                .copied()
                .filter(|u| pos[u] > pos[&v])
                .collect();
            for (i, &a) in later.iter().enumerate() {
                for &b in &later[i + 1..] {
                    fill.get_mut(&a).unwrap().insert(b);
                    fill.get_mut(&b).unwrap().insert(a);
                }
            }
            let parent = later.iter().copied().min_by_key(|u| pos[u]);
            let node = td.add_node(later.iter().copied().chain([v]).collect());
            node_of.insert(v, node);
            attach.push((v, parent));
        }
        let mut roots = Vec::new();
        for (v, parent) in attach {
            match parent {
                Some(p) => td.add_tree_edge(node_of[&v], node_of[&p]),
                None => roots.push(node_of[&v]),
            }
        }
        for pair in roots.windows(2) {
            td.add_tree_edge(pair[0], pair[1]);
        }
        td
    }
}

/// Bags along a path, in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Bag>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Bag>) -> Self {
        Self { bags }
    }

    pub fn width(&self) -> i64 {
        width_of(self.bags.iter())
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Node `i` holds `bags[i]`; tree edges join consecutive nodes.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let mut td = TreeDecomposition::new();
        let mut prev = None;
        for bag in &self.bags {
            let x = td.add_node(bag.clone());
            if let Some(p) = prev {
                td.add_tree_edge(p, x);
            }
            prev = Some(x);
        }
        td
    }
}

/// Positions `0..n` in order; `order[i]` is the vertex at position `i + 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearOrdering {
    pub order: Vec<Vertex>,
}

impl LinearOrdering {
    pub fn new(order: Vec<Vertex>) -> Self {
        Self { order }
    }

    /// Vertices in increasing id order.
    pub fn identity(g: &Graph) -> Self {
        Self::new(g.vertices().collect())
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.order.iter().copied()
    }

    /// Zero-based position of every vertex, after checking the ordering is a
    /// permutation of `g`'s vertices.
    pub fn positions(&self, g: &Graph) -> Result<HashMap<Vertex, usize>, OrderingError> {
        if self.order.len() != g.vertex_count() {
            return Err(OrderingError::NotAPermutation);
        }
        let mut pos = HashMap::with_capacity(self.order.len());
        for (i, &v) in self.order.iter().enumerate() {
            if !g.has_vertex(v) || pos.insert(v, i).is_some() {
                return Err(OrderingError::NotAPermutation);
            }
        }
        Ok(pos)
    }
}

fn check_bag_vertices<'a>(
    g: &Graph,
    bags: impl Iterator<Item = (NodeId, &'a Bag)>,
) -> Result<HashMap<Vertex, Vec<NodeId>>, DecompositionError> {
    let mut occurrences: HashMap<Vertex, Vec<NodeId>> = HashMap::new();
    for (x, bag) in bags {
        for v in bag.iter() {
            if !g.has_vertex(v) {
                return Err(DecompositionError::UnknownVertex { node: x, vertex: v });
            }
            occurrences.entry(v).or_default().push(x);
        }
    }
    Ok(occurrences)
}

fn check_cover<'a>(
    g: &Graph,
    occurrences: &HashMap<Vertex, Vec<NodeId>>,
    bag: impl Fn(NodeId) -> &'a Bag,
) -> Result<(), DecompositionError> {
    for v in g.vertices() {
        if !occurrences.contains_key(&v) {
            return Err(DecompositionError::VertexUncovered(v));
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = if occurrences[&u].len() <= occurrences[&v].len() {
            (u, v)
        } else {
            (v, u)
        };
        if !occurrences[&a].iter().any(|&x| bag(x).contains(b)) {
            return Err(DecompositionError::EdgeUncovered(u, v));
        }
    }
    Ok(())
}

/// Checks all three decomposition axioms and returns the width.
pub fn verify_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<i64, DecompositionError> {
    if td.node_count() == 0 {
        return if g.is_empty() { Ok(-1) } else { Err(DecompositionError::NoNodes) };
    }
    for nbrs in td.adj.values() {
        if let Some(&y) = nbrs.iter().find(|y| !td.bags.contains_key(y)) {
            return Err(DecompositionError::UnknownNode(y));
        }
    }
    let edges = td.tree_edges().count();
    let connected = {
        let start = td.nodes().next().unwrap();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in td.tree_neighbors(x) {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.len() == td.node_count()
    };
    if !connected || edges + 1 != td.node_count() {
        return Err(DecompositionError::NotATree { nodes: td.node_count(), edges, connected });
    }

    let occurrences = check_bag_vertices(g, td.bags())?;
    check_cover(g, &occurrences, |x| &td.bags[&x])?;

    for (&v, nodes) in &occurrences {
        if nodes.len() == 1 {
            continue;
        }
        let holders: BTreeSet<NodeId> = nodes.iter().copied().collect();
        let mut seen = BTreeSet::from([nodes[0]]);
        let mut queue = VecDeque::from([nodes[0]]);
        while let Some(x) = queue.pop_front() {
            for y in td.tree_neighbors(x) {
                if holders.contains(&y) && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        if seen.len() != holders.len() {
            return Err(DecompositionError::DisconnectedOccurrence(v));
        }
    }
    Ok(td.width())
}

/// Checks the path decomposition axioms (occurrences form intervals) and
/// returns the width.
pub fn verify_path_decomposition(g: &Graph, pd: &PathDecomposition) -> Result<i64, DecompositionError> {
    if pd.bags.is_empty() {
        return if g.is_empty() { Ok(-1) } else { Err(DecompositionError::NoNodes) };
    }
    let occurrences = check_bag_vertices(g, pd.bags.iter().enumerate())?;
    check_cover(g, &occurrences, |i| &pd.bags[i])?;
    for (&v, idx) in &occurrences {
        // indices are pushed in increasing order
        if idx.last().unwrap() - idx[0] + 1 != idx.len() {
            return Err(DecompositionError::DisconnectedOccurrence(v));
        }
    }
    Ok(pd.width())
}

/// Maximum, over prefixes, of the number of edges leaving the prefix.
pub fn cutwidth_of_ordering(g: &Graph, f: &LinearOrdering) -> Result<usize, OrderingError> {
    let pos = f.positions(g)?;
    // crossing[i] counts edges with one end at position <= i and the other after
    let mut delta = vec![0i64; f.len() + 1];
    for (u, v) in g.edges() {
        let (a, b) = (pos[&u].min(pos[&v]), pos[&u].max(pos[&v]));
        delta[a] += 1;
        delta[b] -= 1;
    }
    let mut best = 0i64;
    let mut run = 0i64;
    for d in delta.iter().take(f.len()) {
        run += d;
        best = best.max(run);
    }
    Ok(best as usize)
}

/// Maximum, over prefixes, of the number of later vertices with a neighbour
/// in the prefix.
pub fn vertex_separation_of_ordering(g: &Graph, f: &LinearOrdering) -> Result<usize, OrderingError> {
    let pos = f.positions(g)?;
    // vertex w counts for prefixes i in [first neighbour position, pos(w) - 1]
    let mut delta = vec![0i64; f.len() + 1];
    for w in g.vertices() {
        let pw = pos[&w];
        if let Some(first) = g.neighbors(w).map(|u| pos[&u]).min() {
            if first < pw {
                delta[first] += 1;
                delta[pw] -= 1;
            }
        }
    }
    let mut best = 0i64;
    let mut run = 0i64;
    for d in delta.iter().take(f.len()) {
        run += d;
        best = best.max(run);
    }
    Ok(best as usize)
}

/// Path decomposition whose `i`-th bag is the `i`-th vertex together with
/// the later vertices adjacent to the prefix ending at it. Its width equals
/// the vertex separation of the ordering.
pub fn path_decomposition_from_ordering(
    g: &Graph,
    f: &LinearOrdering,
) -> Result<PathDecomposition, OrderingError> {
    let pos = f.positions(g)?;
    let mut active: BTreeSet<Vertex> = BTreeSet::new();
    let mut bags = Vec::with_capacity(f.len());
    for (i, v) in f.iter().enumerate() {
        active.remove(&v);
        active.extend(g.neighbors(v).filter(|u| pos[u] > i));
        bags.push(active.iter().copied().chain([v]).collect());
    }
    Ok(PathDecomposition::new(bags))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn single_bag_triangle() {
        let td = PathDecomposition::new(vec![Bag::from([0, 1, 2])]).to_tree_decomposition();
        assert_eq!(verify_tree_decomposition(&complete(3), &td), Ok(2));
    }

    #[test]
    fn path_of_three() {
        let pd = PathDecomposition::new(vec![Bag::from([0, 1]), Bag::from([1, 2])]);
        assert_eq!(verify_path_decomposition(&path(3), &pd), Ok(1));
        assert_eq!(verify_tree_decomposition(&path(3), &pd.to_tree_decomposition()), Ok(1));
    }

    #[test]
    fn uncovered_edge_is_reported() {
        // a=0, b=1, c=2 with edge {b,c}
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        let pd = PathDecomposition::new(vec![Bag::from([0, 1]), Bag::from([2])]);
        assert_eq!(
            verify_tree_decomposition(&g, &pd.to_tree_decomposition()),
            Err(DecompositionError::EdgeUncovered(1, 2))
        );
    }

    #[test]
    fn other_axiom_failures() {
        let g = path(3);
        let missing = PathDecomposition::new(vec![Bag::from([0, 1])]);
        assert_eq!(
            verify_path_decomposition(&g, &missing),
            Err(DecompositionError::VertexUncovered(2))
        );
        let split = PathDecomposition::new(vec![Bag::from([0, 1]), Bag::from([1, 2]), Bag::from([0])]);
        assert_eq!(
            verify_tree_decomposition(&g, &split.to_tree_decomposition()),
            Err(DecompositionError::DisconnectedOccurrence(0))
        );
        assert_eq!(
            verify_path_decomposition(&g, &split),
            Err(DecompositionError::DisconnectedOccurrence(0))
        );
        let stranger = PathDecomposition::new(vec![Bag::from([0, 1, 2, 9])]);
        assert_eq!(
            verify_path_decomposition(&g, &stranger),
            Err(DecompositionError::UnknownVertex { node: 0, vertex: 9 })
        );
        let mut forest = TreeDecomposition::new();
        forest.add_node(Bag::from([0, 1]));
        forest.add_node(Bag::from([1, 2]));
        assert!(matches!(
            verify_tree_decomposition(&g, &forest),
            Err(DecompositionError::NotATree { connected: false, .. })
        ));
    }

    #[test]
    fn empty_graph_conventions() {
        let g = Graph::new();
        assert_eq!(verify_tree_decomposition(&g, &TreeDecomposition::new()), Ok(-1));
        let edgeless = Graph::from_edges(3, []).unwrap();
        let pd = PathDecomposition::new(vec![Bag::from([0]), Bag::from([1]), Bag::from([2])]);
        assert_eq!(verify_path_decomposition(&edgeless, &pd), Ok(0));
    }

    #[test]
    fn cutwidth_examples() {
        let p4 = path(4);
        assert_eq!(cutwidth_of_ordering(&p4, &LinearOrdering::identity(&p4)), Ok(1));
        let k4 = complete(4);
        assert_eq!(cutwidth_of_ordering(&k4, &LinearOrdering::new(vec![2, 0, 3, 1])), Ok(4));
        // star with centre 0 placed second: leaves 1 | 0 | 2 3
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(cutwidth_of_ordering(&star, &LinearOrdering::new(vec![1, 0, 2, 3])), Ok(2));
        assert_eq!(
            cutwidth_of_ordering(&star, &LinearOrdering::new(vec![1, 0, 2])),
            Err(OrderingError::NotAPermutation)
        );
        assert_eq!(
            cutwidth_of_ordering(&star, &LinearOrdering::new(vec![1, 0, 2, 2])),
            Err(OrderingError::NotAPermutation)
        );
    }

    #[test]
    fn vertex_separation_examples() {
        let k3 = complete(3);
        assert_eq!(vertex_separation_of_ordering(&k3, &LinearOrdering::new(vec![1, 2, 0])), Ok(2));
        let p4 = path(4);
        assert_eq!(vertex_separation_of_ordering(&p4, &LinearOrdering::identity(&p4)), Ok(1));
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(vertex_separation_of_ordering(&c4, &LinearOrdering::identity(&c4)), Ok(2));
    }

    #[test]
    fn ordering_pathdec_has_vsn_width() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f = LinearOrdering::identity(&c4);
        let pd = path_decomposition_from_ordering(&c4, &f).unwrap();
        assert_eq!(verify_path_decomposition(&c4, &pd), Ok(2));
    }

    #[test]
    fn elimination_ordering_decomposition() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let td = TreeDecomposition::from_elimination_ordering(&c5, &[0, 1, 2, 3, 4]);
        assert_eq!(verify_tree_decomposition(&c5, &td), Ok(2));
        // disconnected graph: roots get chained together
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let td = TreeDecomposition::from_elimination_ordering(&two, &[0, 1, 2, 3]);
        assert_eq!(verify_tree_decomposition(&two, &td), Ok(1));
    }

    #[test]
    fn as_path_round_trip() {
        let pd = PathDecomposition::new(vec![Bag::from([0, 1]), Bag::from([1, 2]), Bag::from([2, 3])]);
        assert_eq!(pd.to_tree_decomposition().as_path(), Some(pd));
        let mut star = TreeDecomposition::new();
        let c = star.add_node(Bag::from([0]));
        for _ in 0..3 {
            let l = star.add_node(Bag::from([0]));
            star.add_tree_edge(c, l);
        }
        assert_eq!(star.as_path(), None);
    }
}
