//! Partitioning a 2-colored graph into at most 2*alpha monochromatic
//! pieces: connected matchings, spanning cycles, edges and vertices.
//!
//! Run with: cargo run --example connected_matching_partition

use monopart::generators;
use monopart::graph::{Color, ColoredGraph};
use monopart::partition::{connected_matching_partition, posa_partition};

fn show(name: &str, g: &ColoredGraph) {
    let pieces = connected_matching_partition(g).expect("partition");
    let alpha = g.independence_number().expect("alpha");
    println!("{name}: n = {}, alpha = {alpha}, pieces = {} (bound {})", g.n(), pieces.len(), 2 * alpha);
    for p in &pieces {
        let color = p.color.map(|c| c.to_string()).unwrap_or_else(|| "any".into());
        println!("  {:?} [{color}] vertices {:?}", p.kind, p.vertices);
    }
}

fn main() {
    show("all-red K5", &ColoredGraph::complete(5, |_, _| Color::Red));

    // The tight family: every block needs one red and one blue piece.
    show("two K3 blocks", &generators::ks_blocks(2, 3).unwrap());
    show("two K5 blocks", &generators::ks_blocks(2, 5).unwrap());

    // The single-color engine underneath: any graph splits into at most
    // alpha cycles, edges and vertices.
    let view = generators::g6().view(Some(Color::Blue));
    let pieces = posa_partition(&view);
    println!("blue subgraph of the C6 complement, alpha-piece split:");
    for p in &pieces {
        println!("  {:?} vertices {:?}", p.kind, p.vertices);
    }
}
