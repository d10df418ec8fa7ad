//! Covers and partitions that avoid a marked set of perturbed edges. With
//! at most eps * (n choose 2) edges marked, all structure lives in the
//! unperturbed graph and only O(sqrt(eps) n) vertices are left behind.
//!
//! Run with: cargo run --example perturbed_cover

use monopart::graph::{Color, ColoredGraph};
use monopart::perturbed::{
    perturbed_component_cover, perturbed_partition, ramsey_bound, PerturbedGraph,
};

fn main() {
    let info = ramsey_bound(1).unwrap();
    println!(
        "alpha = 1: {} colors, Ramsey bound {}, leftover factor f = {}",
        info.colors, info.ramsey_upper, info.f_alpha
    );
    let info2 = ramsey_bound(2).unwrap();
    println!(
        "alpha = 2: {} colors, Ramsey bound with {} bits (astronomical but exact)",
        info2.colors,
        info2.ramsey_upper.bits()
    );

    // A complete graph with a few edges marked perturbed: the cover must
    // avoid them, and the leftover stays within f(alpha) sqrt(eps) n.
    let n = 60;
    let g = ColoredGraph::complete(n, |u, v| {
        if (u + 2 * v) % 3 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    });
    let marked = vec![(0, 1), (0, 2), (3, 4), (10, 20), (30, 31)];
    let eps = 0.01;
    let pg = PerturbedGraph::new(g, marked, eps).unwrap();
    let cover = perturbed_component_cover(&pg).unwrap();
    println!(
        "n = {n}, eps = {eps}: cover by {} components, leftover {:?} (bound {:.1})",
        cover.cover.len(),
        cover.leftover,
        25.0 * eps.sqrt() * n as f64
    );

    let part = perturbed_partition(&pg).unwrap();
    println!(
        "partition: {} pieces avoiding every marked edge, leftover {:?}",
        part.pieces.len(),
        part.leftover
    );
    for p in &part.pieces {
        let color = p.color.map(|c| c.to_string()).unwrap_or_else(|| "any".into());
        println!("  {:?} [{color}] {} vertices", p.kind, p.vertices.len());
    }
}
