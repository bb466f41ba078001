//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use widthforge::catalog::{connected_graphs_up_to, graphs_up_to};
use widthforge::cobipartite::build_f;
use widthforge::cubic::{
    brick_wall_pathdec, build_brick_wall, build_g1, g1_decomposition_to_ordering,
    gadget_contraction_witness, ordering_to_g1_pathdec, reduce_cutwidth_to_treewidth,
    row_contraction_witness,
};
use widthforge::generators::{complete, complete_bipartite, cube};
use widthforge::special::{attach_degree_gadget, embed_3d_grid};
use widthforge::{
    check_regularity, contract_low_degree, cutwidth_of_ordering, exact_cutwidth, exact_pathwidth,
    exact_treewidth, is_isomorphic, verify_minor_witness, verify_path_decomposition,
    verify_tree_decomposition, Bag, Graph, LinearOrdering, Vertex,
};

const BUDGET: usize = 24;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for g in connected_graphs_up_to(5) {
        let n = g.vertex_count() as i64;
        let f = build_f(&g).graph;
        let tw = exact_treewidth(&f, BUDGET).map_err(|e| e.to_string())?.width;
        let pw = exact_pathwidth(&f, BUDGET).map_err(|e| e.to_string())?.width;
        let base = exact_pathwidth(&g, BUDGET).map_err(|e| e.to_string())?.width;
        ensure(tw == n + base && pw == n + base, || {
            format!("{:?}: tw(F)={tw} pw(F)={pw} n+pw(G)={}", g.edges().collect::<Vec<_>>(), n + base)
        })?;
    }
    within(start, Duration::from_secs(60))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let k4 = complete(4);
    let cw = exact_cutwidth(&k4, BUDGET).map_err(|e| e.to_string())?.width;
    ensure(cw == 4, || format!("cw(K4) = {cw}"))?;
    let g1 = build_g1(&k4).map_err(|e| e.to_string())?;
    let tw = exact_treewidth(&g1.graph, BUDGET).map_err(|e| e.to_string())?;
    ensure(tw.width == 18 && tw.width == cw + 3 * 4 + 2, || format!("tw(G1(K4)) = {}", tw.width))?;
    ensure(verify_tree_decomposition(&g1.graph, &tw.certificate) == Ok(18), || "certificate".into())?;
    within(start, Duration::from_secs(600))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, g) in [("K4", complete(4)), ("K33", complete_bipartite(3, 3)), ("Q3", cube())] {
        let inst = build_g1(&g).map_err(|e| e.to_string())?;
        let n = g.vertex_count() as i64;
        let mut order: Vec<Vertex> = g.vertices().collect();
        for trial in 0..50 {
            order.shuffle(&mut rng);
            let f = LinearOrdering::new(order.clone());
            let k = cutwidth_of_ordering(&g, &f).map_err(|e| e.to_string())? as i64;
            let pd = ordering_to_g1_pathdec(&inst, &f).map_err(|e| e.to_string())?;
            let width = verify_path_decomposition(&inst.graph, &pd).map_err(|e| e.to_string())?;
            ensure(width == 3 * n + k + 2, || format!("{name} trial {trial}: width {width}, k {k}"))?;
            let back = g1_decomposition_to_ordering(&inst, &pd.to_tree_decomposition())
                .map_err(|e| e.to_string())?;
            let k2 = cutwidth_of_ordering(&g, &back).map_err(|e| e.to_string())? as i64;
            ensure(k2 <= k, || format!("{name} trial {trial}: round trip {k2} > {k}"))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for r in 2..=6 {
        for c in 2..=6 {
            let w = build_brick_wall(r, c).map_err(|e| e.to_string())?;
            let pd = brick_wall_pathdec(&w);
            let width = verify_path_decomposition(&w.graph, &pd).map_err(|e| e.to_string())?;
            let first: Bag = w.column(0).into_iter().collect();
            let last: Bag = w.column(c - 1).into_iter().collect();
            let ends = pd.bags.first() == Some(&first) && pd.bags.last() == Some(&last);
            if width > c as i64 || !ends {
                failures.push(format!("B({r},{c}): width {width}, end bags are columns: {ends}"));
            }
            if r * c <= 20 {
                let tw = exact_treewidth(&w.graph, BUDGET).map_err(|e| e.to_string())?.width;
                if tw > c as i64 {
                    failures.push(format!("B({r},{c}): tw {tw} > {c}"));
                }
            }
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn criterion_5() -> Outcome {
    let k4 = complete(4);
    let f = exact_cutwidth(&k4, BUDGET).map_err(|e| e.to_string())?.certificate;
    let r = reduce_cutwidth_to_treewidth(&k4, &f).map_err(|e| e.to_string())?;
    ensure(check_regularity(&r.g4, 3), || "G4 is not 3-regular".into())?;
    let width = verify_tree_decomposition(&r.g4, &r.certificate).map_err(|e| e.to_string())?;
    ensure(width == 18 && r.target_width == 18, || format!("certificate width {width}"))?;
    ensure(!r.validity_flag, || "validity flag set for n = 4".into())?;

    let s = &r.stages;
    let gadgets = gadget_contraction_witness(&s.step2, &s.step3);
    ensure(verify_minor_witness(&s.step3.graph, &s.step2.graph, &gadgets) == Ok(true), || {
        "gadget-tree contraction does not recover G2".into()
    })?;
    ensure(verify_minor_witness(&s.step3.graph, &r.g4, &s.step4.witness) == Ok(true), || {
        "G4 is not recovered from G3 by its contraction witness".into()
    })?;
    let (host2, rows) = row_contraction_witness(&s.step1, &s.step2);
    ensure(verify_minor_witness(&host2, &s.step1.graph, &rows) == Ok(true), || {
        "row contraction does not recover G1".into()
    })?;
    let mut host3: Graph = s.step3.graph.clone();
    for (u, v) in host2.edges().filter(|&(u, v)| !s.step2.graph.has_edge(u, v)) {
        host3.add_edge(u, v).map_err(|e| e.to_string())?;
    }
    let composed = rows.compose(&gadgets);
    ensure(verify_minor_witness(&host3, &s.step1.graph, &composed) == Ok(true), || {
        "composed witness does not recover G1 from G3".into()
    })
}

fn criterion_6() -> Outcome {
    for d in [3usize, 4] {
        for host in graphs_up_to(7) {
            let tw = exact_treewidth(&host, BUDGET).map_err(|e| e.to_string())?.width;
            if tw < d as i64 {
                continue;
            }
            for v in host.vertices() {
                let (g, _) = attach_degree_gadget(&host, v, d).map_err(|e| e.to_string())?;
                let after = exact_treewidth(&g, BUDGET).map_err(|e| e.to_string())?.width;
                ensure(after == tw, || {
                    format!("d={d}, host {:?}, v={v}: {tw} -> {after}", host.edges().collect::<Vec<_>>())
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    for g in [complete(4), complete_bipartite(3, 3)] {
        let n = g.vertex_count();
        let emb = embed_3d_grid(&g).map_err(|e| e.to_string())?;
        emb.validate().map_err(|e| e.to_string())?;
        ensure(emb.dims == (6 * n - 1, 3 * n + 1, 3), || format!("dims {:?}", emb.dims))?;
        ensure(emb.max_subdivisions() <= 12 * n + 5, || format!("{} subdivisions", emb.max_subdivisions()))?;
        let (suppressed, _) = contract_low_degree(&emb.host_graph).map_err(|e| e.to_string())?;
        ensure(is_isomorphic(&suppressed, &g), || "suppression is not isomorphic to the input".into())?;
    }
    within(start, Duration::from_secs(10))
}

fn criterion_8() -> Outcome {
    for g in graphs_up_to(6) {
        let edges = || format!("{:?}", g.edges().collect::<Vec<_>>());
        let tw = exact_treewidth(&g, BUDGET).map_err(|e| e.to_string())?.width;
        let pw = exact_pathwidth(&g, BUDGET).map_err(|e| e.to_string())?.width;
        ensure(pw == common::naive_pathwidth(&g), || format!("pathwidth on {}", edges()))?;
        ensure(tw == common::naive_treewidth(&g), || format!("treewidth on {}", edges()))?;
        ensure(tw <= pw, || format!("tw > pw on {}", edges()))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("co-bipartite identity tw(F(G)) = pw(F(G)) = n + pw(G)", criterion_1),
        ("tw(G1(K4)) = 18 = cw(K4) + 14", criterion_2),
        ("G1 certificate lifts and ordering round trip", criterion_3),
        ("brick wall path decompositions", criterion_4),
        ("K4 pipeline certificate and minor witnesses", criterion_5),
        ("degree gadget preserves treewidth", criterion_6),
        ("3D grid embedding", criterion_7),
        ("oracle cross-validation", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
