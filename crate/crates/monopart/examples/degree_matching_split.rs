//! Splitting a perfect matching across the two colors when the minimum
//! degree reaches 3n/4: the red edges form a connected red matching, the
//! blue edges a connected blue matching, and together they saturate V.
//!
//! Run with: cargo run --example degree_matching_split

use monopart::degree::degmatch_split;
use monopart::generators;
use monopart::graph::{Color, ColoredGraph};

fn main() {
    // Dense random instances always split.
    for seed in [1u64, 2, 3] {
        let g = generators::min_degree(12, 0.75, seed).unwrap();
        let (split, trace) = degmatch_split(&g).expect("split");
        println!(
            "seed {seed}: case {} (largest component {} of color {}, p = {}, q = {})",
            trace.case,
            trace.c1.len(),
            trace.c1_color,
            trace.p,
            trace.q
        );
        println!("  red matching: {:?}", split.red_edges);
        println!("  blue matching: {:?}", split.blue_edges);
    }

    // Two red triangles joined by a blue K_{3,3}: the blue component spans.
    let g = ColoredGraph::complete(6, |u, v| {
        if (u < 3) == (v < 3) {
            Color::Red
        } else {
            Color::Blue
        }
    });
    let (split, trace) = degmatch_split(&g).unwrap();
    println!(
        "two red triangles + blue K33: case {}, {} red / {} blue matching edges",
        trace.case,
        split.red_edges.len(),
        split.blue_edges.len()
    );

    // The threshold is sharp: one less degree and the split may not exist.
    let sharp = generators::sharpness4(2, 7).unwrap();
    match degmatch_split(&sharp) {
        Err(e) => println!("sharpness instance rejected as expected: {e}"),
        Ok(_) => unreachable!("min degree 3n/4 - 1 must be rejected"),
    }
}
