//! Near-Hamiltonian paths in dense balanced bipartite graphs: when the
//! bipartite complement has no K_{p,p}, a path through (2 - eps) m of the
//! 2m vertices is assembled by splicing fresh paths onto the main one
//! through an edge near the tails.
//!
//! Run with: cargo run --example bipartite_splice

use monopart::extremal::{bipartite_long_path, bipartite_threshold};

fn main() {
    // Complete bipartite graph: the splice loop reaches a full path.
    let m = 6;
    let a: Vec<usize> = (0..m).collect();
    let b: Vec<usize> = (m..2 * m).collect();
    let all: Vec<(usize, usize)> =
        a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))).collect();
    let out = bipartite_long_path(&a, &b, &all, 1, 0.5).unwrap();
    println!(
        "complete bipartite {m}+{m}: path through {} vertices (guaranteed: {})",
        out.path.len(),
        out.guaranteed
    );

    // Remove a perfect matching; the complement is a matching, far from
    // containing K_{2,2}, and a spanning path still exists.
    let minus_pm: Vec<(usize, usize)> =
        all.iter().copied().filter(|&(u, v)| v != u + m).collect();
    let out = bipartite_long_path(&a, &b, &minus_pm, 2, 0.25).unwrap();
    println!(
        "minus a perfect matching: path through {} vertices -> {:?}",
        out.path.len(),
        out.path.vertices
    );

    println!(
        "guarantee thresholds: m >= {:.0} for p = 1, eps = 0.5; m >= {:.0} for p = 2, eps = 0.25",
        bipartite_threshold(1, 0.5),
        bipartite_threshold(2, 0.25)
    );
}
