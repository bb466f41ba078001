use std::collections::BTreeSet;

use itertools::Itertools;
use widthforge::catalog::{connected_graphs_up_to, graphs_of_order, graphs_up_to};
use widthforge::cobipartite::{build_f, lift_pathdec_to_f, project_any_decomposition};
use widthforge::cubic::{build_g1, g1_decomposition_to_ordering, ordering_to_g1_pathdec};
use widthforge::generators::{complete, complete_bipartite, prism};
use widthforge::transform::{find_balanced_bag, find_clique_bag, pathify_between_cliques, BalanceBound};
use widthforge::{
    check_regularity, contract_low_degree, cutwidth_of_ordering, exact_pathwidth, exact_treewidth,
    verify_minor_witness, verify_path_decomposition, Edge, Graph, LinearOrdering,
};

fn tw(g: &Graph) -> i64 {
    exact_treewidth(g, 24).unwrap().width
}

/// Contracts `{u, v}` onto `u`.
fn contract_edge(g: &Graph, (u, v): Edge) -> Graph {
    let mut out = g.clone();
    let nbrs: Vec<usize> = g.neighbors(v).filter(|&w| w != u).collect();
    out.remove_vertex(v);
    for w in nbrs {
        out.add_edge(u, w).unwrap();
    }
    out
}

#[test]
fn minors_never_raise_treewidth() {
    for g in graphs_up_to(6) {
        let base = tw(&g);
        for e in g.edges() {
            let mut deleted = g.clone();
            deleted.remove_edge(e.0, e.1);
            assert!(tw(&deleted) <= base);
            assert!(tw(&contract_edge(&g, e)) <= base);
        }
        for v in g.vertices() {
            let mut smaller = g.clone();
            smaller.remove_vertex(v);
            assert!(tw(&smaller) <= base);
        }
    }
}

#[test]
fn subdivision_preserves_treewidth() {
    for g in graphs_up_to(6) {
        let base = tw(&g);
        for (u, v) in g.edges() {
            let (h, x) = g.subdivide_edge(u, v).unwrap();
            assert_eq!(tw(&h), base, "{:?} subdivided at {u}{v}", g.edges().collect::<Vec<_>>());
            let back = h.contract_into_neighbor(x).unwrap();
            assert_eq!(back.edge_count(), g.edge_count());
        }
    }
}

#[test]
fn low_degree_contraction_keeps_treewidth_of_subcubic_graphs() {
    let mut checked = 0;
    for host in [complete(4), complete_bipartite(3, 3), prism(3)] {
        let base = tw(&host);
        let edges: Vec<Edge> = host.edges().collect();
        for picks in edges.iter().combinations(3) {
            let mut g = host.clone();
            for &&(u, v) in &picks {
                g = g.subdivide_edge(u, v).unwrap().0;
            }
            if g.vertex_count() > 12 {
                continue;
            }
            assert!(g.max_degree() <= 3 && tw(&g) >= 3);
            let (reduced, witness) = contract_low_degree(&g).unwrap();
            assert!(check_regularity(&reduced, 3));
            assert_eq!(tw(&reduced), tw(&g));
            assert_eq!(tw(&reduced), base);
            assert_eq!(verify_minor_witness(&g, &reduced, &witness), Ok(true));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn cobipartite_lift_and_projection_are_exact() {
    for g in graphs_up_to(5) {
        let n = g.vertex_count() as i64;
        let inst = build_f(&g);
        let pw = exact_pathwidth(&g, 24).unwrap();
        let lifted = lift_pathdec_to_f(&inst, &pw.certificate).unwrap();
        assert_eq!(verify_path_decomposition(&inst.graph, &lifted), Ok(pw.width + n));

        let opt = exact_treewidth(&inst.graph, 24).unwrap();
        let projected = project_any_decomposition(&inst, &opt.certificate).unwrap();
        let width = verify_path_decomposition(&g, &projected).unwrap();
        assert!(width <= opt.width - n);
        assert_eq!(width, pw.width);
    }
}

#[test]
fn f_sides_are_cliques_with_bags() {
    for g in connected_graphs_up_to(5) {
        let inst = build_f(&g);
        let td = exact_treewidth(&inst.graph, 24).unwrap().certificate;
        for side in [&inst.side_v, &inst.side_vprime] {
            let x = find_clique_bag(&inst.graph, &td, side).unwrap();
            assert!(td.bag(x).unwrap().contains_all(side.iter()));
        }
        let pd = pathify_between_cliques(&inst.graph, &td, &inst.side_v, &inst.side_vprime).unwrap();
        assert!(verify_path_decomposition(&inst.graph, &pd).unwrap() <= td.width());
    }
}

#[test]
fn balanced_bags_exist_on_catalog() {
    for g in graphs_of_order(6) {
        let td = exact_treewidth(&g, 24).unwrap().certificate;
        let all: BTreeSet<usize> = g.vertices().collect();
        let found = find_balanced_bag(&g, &td, &all).unwrap();
        assert_eq!(found.bound, BalanceBound::HalfOfSet);
    }
}

#[test]
fn cubic_round_trip_over_all_orderings() {
    for g in [complete(4), complete_bipartite(3, 3), prism(3)] {
        let inst = build_g1(&g).unwrap();
        let n = g.vertex_count() as i64;
        for order in g.vertices().permutations(g.vertex_count()) {
            let f = LinearOrdering::new(order);
            let k = cutwidth_of_ordering(&g, &f).unwrap() as i64;
            let pd = ordering_to_g1_pathdec(&inst, &f).unwrap();
            assert_eq!(verify_path_decomposition(&inst.graph, &pd), Ok(3 * n + k + 2));
            let back = g1_decomposition_to_ordering(&inst, &pd.to_tree_decomposition()).unwrap();
            assert!(cutwidth_of_ordering(&g, &back).unwrap() as i64 <= k);
        }
    }
}
