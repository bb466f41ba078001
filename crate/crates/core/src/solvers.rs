//! Exact treewidth, pathwidth and cutwidth for small graphs.
//!
//! All three solvers share one scheme: for increasing width bounds `k`, a
//! depth-first search over vertex subsets (the prefix of an ordering) asks
//! whether the prefix can be extended to the full set without the per-step
//! cost exceeding `k`. Failed subsets are memoised, so each bound costs at
//! most one visit per subset. Vertices are tried in increasing id order, so
//! the first ordering found is the lexicographically smallest one of width
//! `k`.
//!
//! * treewidth: cost of eliminating `v` after `S` is the number of vertices
//!   outside `S + v` reachable from `v` through `S`. A maximum clique is
//!   eliminated last, which never increases the optimum.
//! * pathwidth: cost of a prefix `S` is `|N(S) \ S|` (vertex separation).
//! * cutwidth: cost of a prefix `S` is the number of edges leaving `S`.
//!
//! Disconnected graphs are solved one component at a time.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::decomposition::{
    path_decomposition_from_ordering, LinearOrdering, PathDecomposition, TreeDecomposition,
};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_TREEWIDTH_BUDGET: usize = 24;
pub const DEFAULT_PATHWIDTH_BUDGET: usize = 24;
pub const DEFAULT_CUTWIDTH_BUDGET: usize = 20;

/// Largest budget the bitmask representation supports.
pub const MAX_BUDGET: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has {vertices} vertices, over the budget of {budget}")]
    BudgetExceeded { vertices: usize, budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<C> {
    pub width: i64,
    pub certificate: C,
}

fn check_budget(g: &Graph, budget: usize) -> Result<(), SolveError> {
    let budget = budget.min(MAX_BUDGET);
    if g.vertex_count() > budget {
        return Err(SolveError::BudgetExceeded { vertices: g.vertex_count(), budget });
    }
    Ok(())
}

/// A connected component re-indexed `0..n` with adjacency bitmasks.
struct Compact {
    vertices: Vec<Vertex>,
    adj: Vec<u64>,
}

impl Compact {
    fn new(g: &Graph, comp: &BTreeSet<Vertex>) -> Self {
        let vertices: Vec<Vertex> = comp.iter().copied().collect();
        let adj = vertices
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .map(|u| 1u64 << vertices.binary_search(&u).unwrap())
                    .fold(0, |m, b| m | b)
            })
            .collect();
        Compact { vertices, adj }
    }

    fn n(&self) -> usize {
        self.vertices.len()
    }

    fn full(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    fn lift<'b>(&'b self, order: &'b [usize]) -> impl Iterator<Item = Vertex> + 'b {
        order.iter().map(move |&i| self.vertices[i])
    }

    /// A maximum clique, found by branch and bound.
    fn max_clique(&self) -> u64 {
        fn grow(adj: &[u64], current: u64, candidates: u64, best: &mut u64) {
            if candidates == 0 {
                if current.count_ones() > best.count_ones() {
                    *best = current;
                }
                return;
            }
            if current.count_ones() + candidates.count_ones() <= best.count_ones() {
                return;
            }
            let mut rest = candidates;
            while rest != 0 {
                if current.count_ones() + rest.count_ones() <= best.count_ones() {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow(adj, current | 1 << v, rest & adj[v], best);
            }
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
        }
        let mut best = 0;
        grow(&self.adj, 0, self.full(), &mut best);
        best
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Subsets already shown not to extend within the current bound.
enum FailedSet {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl FailedSet {
    fn new(n: usize) -> Self {
        if n <= 28 {
            FailedSet::Dense(vec![0; (1usize << n).div_ceil(64)])
        } else {
            FailedSet::Sparse(HashSet::new())
        }
    }

    fn contains(&self, s: u64) -> bool {
        match self {
            FailedSet::Dense(words) => words[(s >> 6) as usize] >> (s & 63) & 1 == 1,
            FailedSet::Sparse(set) => set.contains(&s),
        }
    }

    fn insert(&mut self, s: u64) {
        match self {
            FailedSet::Dense(words) => words[(s >> 6) as usize] |= 1 << (s & 63),
            FailedSet::Sparse(set) => {
                set.insert(s);
            }
        }
    }
}

/// Per-step cost model for the ordering search.
trait OrderingCost {
    /// Auxiliary state carried along a prefix.
    type Aux: Copy;
    fn initial(&self) -> Self::Aux;
    /// Cost of appending `v` to prefix `s`, and the updated state.
    fn step(&self, s: u64, aux: Self::Aux, v: usize) -> (usize, Self::Aux);
}

struct OrderingSearch<'a, C: OrderingCost> {
    cost: &'a C,
    target: u64,
    bound: usize,
    failed: FailedSet,
    order: Vec<usize>,
}

impl<'a, C: OrderingCost> OrderingSearch<'a, C> {
    fn run(cost: &'a C, n: usize, target: u64, bound: usize) -> Option<Vec<usize>> {
        let mut search = OrderingSearch {
            cost,
            target,
            bound,
            failed: FailedSet::new(n),
            order: Vec::with_capacity(n),
        };
        if search.extend(0, cost.initial()) {
            Some(search.order)
        } else {
            None
        }
    }

    fn extend(&mut self, s: u64, aux: C::Aux) -> bool {
        if s == self.target {
            return true;
        }
        if self.failed.contains(s) {
            return false;
        }
        for v in bits(self.target & !s) {
            let (c, next) = self.cost.step(s, aux, v);
            if c > self.bound {
                continue;
            }
            self.order.push(v);
            if self.extend(s | 1 << v, next) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(s);
        false
    }
}

struct EliminationCost<'a> {
    adj: &'a [u64],
}

impl OrderingCost for EliminationCost<'_> {
    type Aux = ();

    fn initial(&self) {}

    fn step(&self, s: u64, _: (), v: usize) -> (usize, ()) {
        let vbit = 1u64 << v;
        let mut comp = vbit;
        let mut reach = self.adj[v];
        loop {
            let grow = reach & s & !comp;
            if grow == 0 {
                break;
            }
            comp |= grow;
            for u in bits(grow) {
                reach |= self.adj[u];
            }
        }
        ((reach & !(s | vbit)).count_ones() as usize, ())
    }
}

struct SeparationCost<'a> {
    adj: &'a [u64],
}

impl OrderingCost for SeparationCost<'_> {
    /// Union of the neighbourhoods of the prefix.
    type Aux = u64;

    fn initial(&self) -> u64 {
        0
    }

    fn step(&self, s: u64, nbrs: u64, v: usize) -> (usize, u64) {
        let nbrs = nbrs | self.adj[v];
        let prefix = s | 1 << v;
        ((nbrs & !prefix).count_ones() as usize, nbrs)
    }
}

struct CutCost<'a> {
    adj: &'a [u64],
}

impl OrderingCost for CutCost<'_> {
    /// Edges leaving the prefix.
    type Aux = usize;

    fn initial(&self) -> usize {
        0
    }

    fn step(&self, s: u64, cut: usize, v: usize) -> (usize, usize) {
        let deg = self.adj[v].count_ones() as usize;
        let inside = (self.adj[v] & s).count_ones() as usize;
        let cut = cut + deg - 2 * inside;
        (cut, cut)
    }
}

/// Optimal elimination ordering of one component and its width.
fn component_treewidth(c: &Compact) -> (usize, Vec<usize>) {
    let clique = c.max_clique();
    let free = c.full() & !clique;
    let clique_width = clique.count_ones().saturating_sub(1) as usize;
    let min_degree = c.adj.iter().map(|a| a.count_ones() as usize).min().unwrap_or(0);
    let cost = EliminationCost { adj: &c.adj };
    let mut k = clique_width.max(min_degree);
    loop {
        if let Some(mut order) = OrderingSearch::run(&cost, c.n(), free, k) {
            order.extend(bits(clique));
            return (k, order);
        }
        k += 1;
    }
}

fn component_ordering<C: OrderingCost>(c: &Compact, cost: &C, lower: usize) -> (usize, Vec<usize>) {
    let mut k = lower;
    loop {
        if let Some(order) = OrderingSearch::run(cost, c.n(), c.full(), k) {
            return (k, order);
        }
        k += 1;
    }
}

/// Exact treewidth with an optimal tree decomposition.
pub fn exact_treewidth(
    g: &Graph,
    budget: usize,
) -> Result<SolveResult<TreeDecomposition>, SolveError> {
    let order = optimal_elimination_ordering(g, budget)?;
    let certificate = TreeDecomposition::from_elimination_ordering(g, &order.order);
    Ok(SolveResult { width: certificate.width(), certificate })
}

/// An elimination ordering of minimum width, components in order of their
/// smallest vertex.
pub fn optimal_elimination_ordering(
    g: &Graph,
    budget: usize,
) -> Result<LinearOrdering, SolveError> {
    check_budget(g, budget)?;
    let mut order = Vec::with_capacity(g.vertex_count());
    for comp in g.components() {
        let c = Compact::new(g, &comp);
        let (_, local) = component_treewidth(&c);
        order.extend(c.lift(&local));
    }
    Ok(LinearOrdering::new(order))
}

/// Exact pathwidth, computed as the vertex separation number, with the path
/// decomposition built from an optimal ordering.
pub fn exact_pathwidth(
    g: &Graph,
    budget: usize,
) -> Result<SolveResult<PathDecomposition>, SolveError> {
    let ordering = exact_vertex_separation(g, budget)?;
    let certificate = path_decomposition_from_ordering(g, &ordering.certificate)
        .expect("solver ordering is a permutation");
    let width = if g.is_empty() { -1 } else { ordering.width };
    Ok(SolveResult { width, certificate })
}

/// Minimum vertex separation and an ordering attaining it.
pub fn exact_vertex_separation(
    g: &Graph,
    budget: usize,
) -> Result<SolveResult<LinearOrdering>, SolveError> {
    check_budget(g, budget)?;
    let mut width = 0;
    let mut order = Vec::with_capacity(g.vertex_count());
    for comp in g.components() {
        let c = Compact::new(g, &comp);
        let min_degree = c.adj.iter().map(|a| a.count_ones() as usize).min().unwrap_or(0);
        let (w, local) = component_ordering(&c, &SeparationCost { adj: &c.adj }, min_degree);
        width = width.max(w);
        order.extend(c.lift(&local));
    }
    Ok(SolveResult { width: width as i64, certificate: LinearOrdering::new(order) })
}

/// Exact cutwidth with an optimal linear ordering.
pub fn exact_cutwidth(
    g: &Graph,
    budget: usize,
) -> Result<SolveResult<LinearOrdering>, SolveError> {
    check_budget(g, budget)?;
    let mut width = 0;
    let mut order = Vec::with_capacity(g.vertex_count());
    for comp in g.components() {
        let c = Compact::new(g, &comp);
        let half_degree = c.adj.iter().map(|a| (a.count_ones() as usize).div_ceil(2)).max().unwrap_or(0);
        let (w, local) = component_ordering(&c, &CutCost { adj: &c.adj }, half_degree);
        width = width.max(w);
        order.extend(c.lift(&local));
    }
    Ok(SolveResult { width: width as i64, certificate: LinearOrdering::new(order) })
}
