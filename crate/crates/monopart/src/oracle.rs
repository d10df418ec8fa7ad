//! Exact exponential solvers for small instances; the ground truth that
//! every constructive module is tested against.
//!
//! Subset feasibility runs on bitmask dynamic programs (per-color
//! Hamiltonian path/cycle tables), partitions and covers on top of those.
//! The `slow` module re-derives the same answers by plain backtracking so
//! that a reported counterexample can be confirmed through two independent
//! code paths.

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, SimpleGraph};

pub const DEFAULT_ORACLE_CAP: usize = 10;

/// Degenerate-case convention: with `allow_degenerate` set (the default),
/// the empty set, single vertices and single edges count as cycles or
/// paths (an edge only in its own color); without it only genuine cycles
/// (length >= 3) and paths (length >= 2... also >= 3 for cycles) qualify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Convention {
    pub allow_degenerate: bool,
}

impl Default for Convention {
    fn default() -> Self {
        Convention { allow_degenerate: true }
    }
}

fn check_cap(what: &'static str, n: usize, cap: Option<usize>) -> Result<()> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

/// Per-color subset feasibility tables.
struct ColorTables {
    /// has_path[mask]: some path of this color spans `mask` (|mask| >= 1;
    /// singletons always qualify structurally, conventions applied later).
    has_path: Vec<bool>,
    /// has_cycle[mask]: some cycle of length >= 3 of this color spans mask.
    has_cycle: Vec<bool>,
    /// edge_mask[mask]: mask is exactly two vertices joined in this color.
    is_edge: Vec<bool>,
}

fn color_tables(g: &ColoredGraph, color: Color) -> ColorTables {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in 0..n {
                if g.color_of(v, u) == Some(color) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();
    let full = 1usize << n;
    // Unrooted path DP: ends[mask] = possible path endpoints spanning mask.
    let mut path_ends = vec![0u32; full];
    // Rooted path DP for cycles: ends of paths spanning mask that start at
    // the lowest vertex of mask.
    let mut rooted_ends = vec![0u32; full];
    for v in 0..n {
        path_ends[1 << v] = 1 << v;
        rooted_ends[1 << v] = 1 << v;
    }
    let mut has_cycle = vec![false; full];
    for mask in 1..full {
        let root = mask.trailing_zeros() as usize;
        let cnt = mask.count_ones();
        if cnt >= 3 && rooted_ends[mask] & adj[root] != 0 {
            has_cycle[mask] = true;
        }
        let mut e = path_ends[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut cand = adj[v] & !(mask as u32);
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                path_ends[mask | 1 << u] |= 1 << u;
            }
        }
        let mut e = rooted_ends[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            // Keep the root the lowest vertex: only extend upward.
            let mut cand = adj[v] & !(mask as u32) & !((1u32 << root) - 1);
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                rooted_ends[mask | 1 << u] |= 1 << u;
            }
        }
    }
    let has_path: Vec<bool> = path_ends.iter().map(|&e| e != 0).collect();
    let mut is_edge = vec![false; full];
    for &(u, v, c) in g.edges() {
        if c == color {
            is_edge[(1 << u) | (1 << v)] = true;
        }
    }
    ColorTables { has_path, has_cycle, is_edge }
}

fn cycle_feasible(t: &ColorTables, mask: usize, conv: Convention) -> bool {
    let cnt = mask.count_ones();
    match cnt {
        0 => false, // the empty piece is handled by callers where allowed
        1 => conv.allow_degenerate,
        2 => conv.allow_degenerate && t.is_edge[mask],
        _ => t.has_cycle[mask],
    }
}

fn path_feasible(t: &ColorTables, mask: usize, conv: Convention) -> bool {
    let cnt = mask.count_ones();
    match cnt {
        0 => false,
        1 => conv.allow_degenerate,
        2 => conv.allow_degenerate && t.is_edge[mask],
        _ => t.has_path[mask],
    }
}

/// Minimum number of vertex-disjoint monochromatic cycles partitioning V,
/// default conventions (vertices and edges count). `None` for the cap uses
/// the default of 10.
pub fn brute_min_cycle_partition(g: &ColoredGraph, cap: Option<usize>) -> Result<usize> {
    brute_min_cycle_partition_with(g, Convention::default(), cap)?
        .ok_or_else(|| Error::contradiction("default conventions always admit a partition"))
}

/// As above under an explicit convention; `None` when no partition exists
/// (possible only with degenerate pieces disallowed).
pub fn brute_min_cycle_partition_with(
    g: &ColoredGraph,
    conv: Convention,
    cap: Option<usize>,
) -> Result<Option<usize>> {
    check_cap("brute_min_cycle_partition", g.n(), cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(0));
    }
    let red = color_tables(g, Color::Red);
    let blue = color_tables(g, Color::Blue);
    let full = 1usize << n;
    let feasible: Vec<bool> = (0..full)
        .map(|m| cycle_feasible(&red, m, conv) || cycle_feasible(&blue, m, conv))
        .collect();
    const INF: u32 = u32::MAX;
    let mut dp = vec![INF; full];
    dp[0] = 0;
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << low);
        // Enumerate pieces containing the lowest uncovered vertex.
        let mut sub = rest;
        loop {
            let piece = sub | (1 << low);
            if feasible[piece] && dp[mask & !piece] != INF {
                dp[mask] = dp[mask].min(1 + dp[mask & !piece]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(if dp[full - 1] == INF { None } else { Some(dp[full - 1] as usize) })
}

/// Maximum number of vertices coverable by a disjoint pair (blue path, red
/// path), default conventions.
pub fn brute_max_two_path_cover(g: &ColoredGraph, cap: Option<usize>) -> Result<usize> {
    brute_max_two_path_cover_with(g, Convention::default(), cap)
}

pub fn brute_max_two_path_cover_with(
    g: &ColoredGraph,
    conv: Convention,
    cap: Option<usize>,
) -> Result<usize> {
    check_cap("brute_max_two_path_cover", g.n(), cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let red = color_tables(g, Color::Red);
    let blue = color_tables(g, Color::Blue);
    let full = 1usize << n;
    // best_red[mask]: most vertices of any red-feasible submask of mask.
    let mut best_red = vec![0u32; full];
    for mask in 1..full {
        let mut b = if path_feasible(&red, mask, conv) { mask.count_ones() } else { 0 };
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            b = b.max(best_red[mask & !(1 << v)]);
        }
        best_red[mask] = b;
    }
    let mut best = best_red[full - 1]; // empty blue path
    for mask in 1..full {
        if path_feasible(&blue, mask, conv) {
            best = best.max(mask.count_ones() + best_red[(full - 1) & !mask]);
        }
    }
    Ok(best as usize)
}

/// Do two vertex-disjoint monochromatic cycles of different colors cover
/// V? Default conventions, where either cycle may also be empty.
pub fn brute_two_cycle_cover_exists(g: &ColoredGraph, cap: Option<usize>) -> Result<bool> {
    brute_two_cycle_cover_exists_with(g, Convention::default(), cap)
}

pub fn brute_two_cycle_cover_exists_with(
    g: &ColoredGraph,
    conv: Convention,
    cap: Option<usize>,
) -> Result<bool> {
    check_cap("brute_two_cycle_cover_exists", g.n(), cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    let red = color_tables(g, Color::Red);
    let blue = color_tables(g, Color::Blue);
    let full = 1usize << n;
    for blue_mask in 0..full {
        let red_mask = (full - 1) & !blue_mask;
        let blue_ok = if blue_mask == 0 {
            conv.allow_degenerate
        } else {
            cycle_feasible(&blue, blue_mask, conv)
        };
        if !blue_ok {
            continue;
        }
        let red_ok = if red_mask == 0 {
            conv.allow_degenerate
        } else {
            cycle_feasible(&red, red_mask, conv)
        };
        if red_ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Maximum vertices coverable by at most `k` vertex-disjoint monochromatic
/// cycles (either color, default conventions).
pub fn brute_max_coverage_k_cycles(
    g: &ColoredGraph,
    k: usize,
    cap: Option<usize>,
) -> Result<usize> {
    check_cap("brute_max_coverage_k_cycles", g.n(), cap)?;
    let n = g.n();
    if n == 0 || k == 0 {
        return Ok(0);
    }
    let conv = Convention::default();
    let red = color_tables(g, Color::Red);
    let blue = color_tables(g, Color::Blue);
    let full = 1usize << n;
    let feasible: Vec<bool> = (0..full)
        .map(|m| cycle_feasible(&red, m, conv) || cycle_feasible(&blue, m, conv))
        .collect();
    // prev[mask] = best coverage inside mask with < t cycles.
    let mut prev = vec![0u32; full];
    let mut cur = vec![0u32; full];
    for _ in 0..k.min(n) {
        for mask in 1..full {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << low);
            // Either leave the lowest vertex uncovered or cover it.
            let mut best = cur[rest];
            let mut sub = rest;
            loop {
                let piece = sub | (1 << low);
                if feasible[piece] {
                    best = best.max(piece.count_ones() + prev[mask & !piece]);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            cur[mask] = best;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[full - 1] as usize)
}

/// Independence number by full subset enumeration (testing cross-check for
/// the branch-and-bound path).
pub fn enumerate_independence_number(g: &ColoredGraph) -> Result<usize> {
    let n = g.n();
    if n > 20 {
        return Err(Error::CapExceeded { what: "enumerate_independence_number", n, cap: 20 });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in 0..n {
                if g.has_edge(v, u) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();
    let full = 1usize << n;
    let mut best = 0;
    let mut independent = vec![false; full];
    independent[0] = true;
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << low);
        independent[mask] = independent[rest] && (adj[low] & rest as u32) == 0;
        if independent[mask] {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Maximum set of vertices no two sharing a monochromatic component, found
/// as a maximum independent set of the conflict graph over all vertex
/// pairs; the independent route against the König matching construction.
pub fn brute_alpha_star(g: &ColoredGraph) -> usize {
    let n = g.n();
    let red = g.component_ids(Color::Red);
    let blue = g.component_ids(Color::Blue);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if red[u] == red[v] || blue[u] == blue[v] {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).max_independent_set_size()
}

/// Backtracking re-verification, deliberately sharing no code with the
/// bitmask tables above.
pub mod slow {
    use super::Convention;
    use crate::graph::{Color, ColoredGraph};

    /// Depth-first search for a Hamiltonian cycle of `color` through
    /// exactly the vertex set `verts`.
    fn spanning_cycle_exists(g: &ColoredGraph, color: Color, verts: &[usize]) -> bool {
        let k = verts.len();
        if k < 3 {
            return false;
        }
        let start = verts[0];
        let mut used = vec![false; g.n()];
        used[start] = true;
        fn dfs(
            g: &ColoredGraph,
            color: Color,
            verts: &[usize],
            used: &mut Vec<bool>,
            cur: usize,
            depth: usize,
            start: usize,
        ) -> bool {
            if depth == verts.len() {
                return g.color_of(cur, start) == Some(color);
            }
            for &next in verts {
                if !used[next] && g.color_of(cur, next) == Some(color) {
                    used[next] = true;
                    if dfs(g, color, verts, used, next, depth + 1, start) {
                        return true;
                    }
                    used[next] = false;
                }
            }
            false
        }
        dfs(g, color, verts, &mut used, start, 1, start)
    }

    fn cycle_set_ok(g: &ColoredGraph, color: Color, verts: &[usize], conv: Convention) -> bool {
        match verts.len() {
            0 => conv.allow_degenerate,
            1 => conv.allow_degenerate,
            2 => conv.allow_degenerate && g.color_of(verts[0], verts[1]) == Some(color),
            _ => spanning_cycle_exists(g, color, verts),
        }
    }

    /// Re-verifies the two-cycle cover question by enumerating the blue
    /// vertex set directly and backtracking on both sides.
    pub fn two_cycle_cover_exists(g: &ColoredGraph, conv: Convention) -> bool {
        let n = g.n();
        assert!(n <= 16, "slow verifier meant for tiny instances");
        let full = 1usize << n;
        for mask in 0..full {
            let blue: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let red: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            if cycle_set_ok(g, Color::Blue, &blue, conv) && cycle_set_ok(g, Color::Red, &red, conv)
            {
                return true;
            }
        }
        false
    }

    /// Re-verifies a coverage value: most vertices coverable by at most
    /// `k` disjoint monochromatic cycles, by explicit piece enumeration.
    pub fn max_coverage_k_cycles(g: &ColoredGraph, conv: Convention, k: usize) -> usize {
        let n = g.n();
        assert!(n <= 10, "slow verifier meant for tiny instances");
        fn rec(
            g: &ColoredGraph,
            conv: Convention,
            remaining: &[usize],
            pieces_left: usize,
            covered: usize,
            best: &mut usize,
        ) {
            *best = (*best).max(covered);
            if pieces_left == 0 || remaining.is_empty() {
                return;
            }
            // The first remaining vertex is either skipped or covered by a
            // piece through it.
            let first = remaining[0];
            let rest: Vec<usize> = remaining[1..].to_vec();
            rec(g, conv, &rest, pieces_left, covered, best);
            let m = rest.len();
            for sub in 0..(1usize << m) {
                let mut piece = vec![first];
                let mut left = Vec::new();
                for (i, &v) in rest.iter().enumerate() {
                    if sub >> i & 1 == 1 {
                        piece.push(v);
                    } else {
                        left.push(v);
                    }
                }
                if cycle_set_ok(g, Color::Red, &piece, conv)
                    || cycle_set_ok(g, Color::Blue, &piece, conv)
                {
                    rec(g, conv, &left, pieces_left - 1, covered + piece.len(), best);
                }
            }
        }
        let verts: Vec<usize> = (0..n).collect();
        let mut best = 0;
        rec(g, conv, &verts, k, 0, &mut best);
        best
    }

    /// Re-verifies a minimum cycle partition value by branch and bound over
    /// explicit piece choices.
    pub fn min_cycle_partition(g: &ColoredGraph, conv: Convention) -> Option<usize> {
        let n = g.n();
        assert!(n <= 12, "slow verifier meant for tiny instances");
        fn rec(
            g: &ColoredGraph,
            conv: Convention,
            remaining: &[usize],
            pieces: usize,
            best: &mut Option<usize>,
        ) {
            if let Some(b) = *best {
                if pieces >= b {
                    return;
                }
            }
            if remaining.is_empty() {
                *best = Some(pieces);
                return;
            }
            let first = remaining[0];
            let rest: Vec<usize> = remaining[1..].to_vec();
            // All subsets of the rest joined with `first` as a candidate piece.
            let m = rest.len();
            for sub in 0..(1usize << m) {
                let mut piece = vec![first];
                let mut left = Vec::new();
                for (i, &v) in rest.iter().enumerate() {
                    if sub >> i & 1 == 1 {
                        piece.push(v);
                    } else {
                        left.push(v);
                    }
                }
                if cycle_set_ok(g, Color::Red, &piece, conv)
                    || cycle_set_ok(g, Color::Blue, &piece, conv)
                {
                    rec(g, conv, &left, pieces + 1, best);
                }
            }
        }
        let verts: Vec<usize> = (0..n).collect();
        let mut best = None;
        rec(g, conv, &verts, 0, &mut best);
        best
    }
}
