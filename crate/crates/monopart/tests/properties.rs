//! Property-based invariants over randomly shaped colored graphs.

use monopart::cover::{alpha_star, component_cover};
use monopart::graph::{Color, ColoredGraph};
use monopart::io::{parse_graph, write_graph};
use monopart::oracle::brute_alpha_star;
use monopart::partition::{connected_matching_partition, validate_partition};
use proptest::prelude::*;

/// Random colored graph: n in 1..=12, each pair independently absent, red
/// or blue.
fn colored_graph() -> impl Strategy<Value = ColoredGraph> {
    (1usize..=12)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(0u8..3, pairs))
        })
        .prop_map(|(n, choices)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match choices[k] {
                        1 => edges.push((u, v, Color::Red)),
                        2 => edges.push((u, v, Color::Blue)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            ColoredGraph::from_edges(n, &edges).expect("generated edges are valid")
        })
}

proptest! {
    #[test]
    fn components_partition_the_vertex_set(g in colored_graph()) {
        for color in Color::BOTH {
            let comps = g.monochromatic_components(color);
            let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn koenig_chain_holds(g in colored_graph()) {
        let cover = component_cover(&g).unwrap();
        cover.validate(&g).unwrap();
        let a_star = alpha_star(&g);
        prop_assert_eq!(cover.size(), a_star);
        prop_assert_eq!(a_star, brute_alpha_star(&g));
        prop_assert!(a_star <= g.independence_number().unwrap());
    }

    #[test]
    fn partition_is_disjoint_valid_and_bounded(g in colored_graph()) {
        let pieces = connected_matching_partition(&g).unwrap();
        validate_partition(&g, &pieces, None).unwrap();
        let alpha = g.independence_number().unwrap();
        prop_assert!(pieces.len() <= 2 * alpha);
    }

    #[test]
    fn graph_files_round_trip(g in colored_graph()) {
        let text = write_graph(&g, &[]);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(parsed.graph.edges(), g.edges());
        prop_assert!(parsed.perturbed.is_empty());
    }
}
