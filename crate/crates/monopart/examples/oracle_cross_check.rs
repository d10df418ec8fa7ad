//! The exact small-instance oracles, and how constructive outputs sandwich
//! against them.
//!
//! Run with: cargo run --example oracle_cross_check

use monopart::generators;
use monopart::graph::ColoredGraph;
use monopart::oracle::{
    brute_max_two_path_cover, brute_min_cycle_partition, brute_min_cycle_partition_with,
    brute_two_cycle_cover_exists, Convention,
};
use monopart::partition::connected_matching_partition;

fn main() {
    // Minimum cycle partitions (vertices and edges count as cycles).
    let blocks = generators::ks_blocks(2, 3).unwrap();
    let exact = brute_min_cycle_partition(&blocks, None).unwrap();
    let constructive = connected_matching_partition(&blocks).unwrap().len();
    println!("two K3 blocks: exact minimum {exact} pieces, constructive engine used {constructive}");

    // The degenerate-piece convention matters: without it some graphs have
    // no cycle partition at all.
    let strict = Convention { allow_degenerate: false };
    let edgeless = ColoredGraph::from_edges(3, &[]).unwrap();
    println!(
        "edgeless n=3: default {:?}, strict {:?}",
        brute_min_cycle_partition(&edgeless, None).unwrap(),
        brute_min_cycle_partition_with(&edgeless, strict, None).unwrap()
    );

    // Two-path cover optima on the small exceptional graphs.
    for (name, g) in [
        ("five-vertex exception", generators::g5()),
        ("six-vertex exception", generators::g6()),
        ("extremal 7-vertex", generators::remark2(7).unwrap()),
    ] {
        println!("{name}: best two-path cover = {}", brute_max_two_path_cover(&g, None).unwrap());
    }

    // The sharpness construction for the 3n/4-degree conjecture: no pair
    // of disjoint monochromatic cycles of different colors covers it.
    for seed in 0..3u64 {
        let g = generators::sharpness4(2, seed).unwrap();
        println!(
            "sharpness seed {seed}: two-cycle cover exists = {}",
            brute_two_cycle_cover_exists(&g, None).unwrap()
        );
    }
}
