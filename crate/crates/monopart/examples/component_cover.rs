//! Covering the vertex set of a 2-colored graph with as few monochromatic
//! components as possible, certified by a matching in the bipartite dual.
//!
//! Run with: cargo run --example component_cover

use monopart::cover::{alpha_star, component_cover};
use monopart::generators;
use monopart::graph::{Color, ColoredGraph};

fn show(name: &str, g: &ColoredGraph) {
    let cover = component_cover(g).expect("cover");
    println!("{name}: n = {}, cover size = {}", g.n(), cover.size());
    for (color, verts) in &cover.components {
        println!("  {color} component {verts:?}");
    }
    println!(
        "  certificate: vertices {:?} pairwise share no monochromatic component",
        cover.matching
    );
    let alpha = g.independence_number().expect("alpha");
    println!(
        "  alpha* = {} <= alpha = {alpha} (equality with the cover size is König duality)",
        alpha_star(g)
    );
}

fn main() {
    // One color of a complete graph always has a spanning component.
    let k6 = ColoredGraph::complete(6, |u, v| {
        if (u + v) % 3 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    });
    show("2-colored K6", &k6);

    // Disjoint blocks each need their own component.
    let blocks = generators::ks_blocks(3, 4).unwrap();
    show("three K4 blocks", &blocks);

    // The complement-of-C6 example: red perfect matching, two blue triangles.
    show("complement of C6", &generators::g6());
}
