//! Long cycles from edge counts: the classical density threshold
//! |E| > ell(n-1)/2 forces a cycle of length ell+1, and in dense 2-colored
//! graphs the majority color carries a cycle through a quarter of the
//! vertices.
//!
//! Run with: cargo run --example long_cycles_from_density

use monopart::extremal::{erdos_gallai_cycle, kst_edge_bound, mono_cycle_quarter};
use monopart::graph::{Color, ColoredGraph, SimpleGraph};

fn main() {
    // Petersen graph: 15 edges beat the ell = 3 threshold, and its girth
    // forces the extractor to find length >= 5.
    let mut e = vec![];
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    let petersen = SimpleGraph::from_edges(10, &e);
    let cyc = erdos_gallai_cycle(&petersen, 3).unwrap();
    println!("Petersen, ell = 3: cycle of length {} -> {:?}", cyc.len(), cyc.vertices);

    // Edge bounds for K_{p,p}-free graphs: with p = 2 a graph on 100
    // vertices misses a C4 only below ~1040 edges.
    for (n, p) in [(10usize, 2usize), (100, 2), (100, 3)] {
        let b = kst_edge_bound(n, p).unwrap();
        println!(
            "K_{{{p},{p}}}-free on {n} vertices: at most {:.1} edges (relaxed {:.1})",
            b.exact, b.relaxed
        );
    }

    // Majority-color cycle in a randomly colored complete graph: the
    // quarter-length guarantee applies as soon as n >= 10 for p = 1.
    let g = ColoredGraph::complete(12, |u, v| {
        if (u * 7 + v) % 2 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    });
    let q = mono_cycle_quarter(&g, 1).unwrap();
    println!(
        "2-colored K12: {} cycle with {} vertices (quarter guarantee: {})",
        q.color,
        q.cycle.len(),
        q.guaranteed
    );
}
