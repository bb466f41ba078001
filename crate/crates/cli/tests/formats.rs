use proptest::prelude::*;
use widthforge::{exact_treewidth, Graph};
use widthforge_cli::formats::{parse_graph, parse_td, write_graph, write_td};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            Graph::from_edges(n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph_files_round_trip(g in graph_strategy()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn decomposition_files_round_trip(g in graph_strategy()) {
        let td = exact_treewidth(&g, 24).unwrap().certificate;
        let text = write_td(&g, &td);
        let back = parse_td(&text, g.vertex_count()).unwrap();
        prop_assert_eq!(write_td(&g, &back), text);
        prop_assert_eq!(widthforge::verify_tree_decomposition(&g, &back), Ok(td.width()));
    }
}
