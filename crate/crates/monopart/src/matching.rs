//! Maximum matching in general graphs via Edmonds' blossom algorithm.
//!
//! O(V^3); augmenting searches start from free vertices in increasing id
//! order and scan sorted adjacency, so results are deterministic.

use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, each stored as (min, max).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    /// Endpoints are pairwise distinct.
    pub fn is_valid(&self) -> bool {
        let vs = self.vertices();
        vs.windows(2).all(|w| w[0] != w[1])
    }
}

/// Maximum-cardinality matching of `g`.
pub fn max_matching(g: &SimpleGraph) -> Matching {
    let mate = max_matching_mates(g);
    let mut edges = Vec::new();
    for v in 0..g.n() {
        if mate[v] != NONE && v < mate[v] {
            edges.push((v, mate[v]));
        }
    }
    Matching { edges }
}

/// Mate array: `mate[v]` is the vertex matched to `v`, or `usize::MAX`.
pub fn max_matching_mates(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some((finish, parent)) = find_augmenting(g, v, &mate) {
                augment(&parent, finish, &mut mate);
            }
        }
    }
    mate
}

fn augment(parent: &[usize], finish: usize, mate: &mut [usize]) {
    let mut v = finish;
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

fn lca(base: &[usize], mate: &[usize], parent: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut used = vec![false; base.len()];
    loop {
        a = base[a];
        used[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_path(
    base: &[usize],
    mate: &[usize],
    parent: &mut [usize],
    blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// BFS for an augmenting path from `root`, contracting blossoms on the fly.
/// On success returns the free endpoint reached plus the parent array that
/// encodes the alternating path back to `root`.
fn find_augmenting(g: &SimpleGraph, root: usize, mate: &[usize]) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                // Odd cycle: contract the blossom rooted at the LCA.
                let cur_base = lca(&base, mate, &parent, v, to);
                let mut blossom = vec![false; n];
                mark_path(&base, mate, &mut parent, &mut blossom, v, cur_base, to);
                mark_path(&base, mate, &mut parent, &mut blossom, to, cur_base, v);
                for u in 0..n {
                    if blossom[base[u]] {
                        base[u] = cur_base;
                        if !used[u] {
                            used[u] = true;
                            queue.push_back(u);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some((to, parent));
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

/// Exhaustive maximum matching size over vertex subsets; test oracle for
/// small graphs (n <= 20 or so).
pub fn brute_max_matching_size(g: &SimpleGraph) -> usize {
    let n = g.n();
    assert!(n <= 20, "brute matching oracle capped at n=20");
    let full: usize = if n == 0 { 0 } else { (1usize << n) - 1 };
    let mut memo = vec![u8::MAX; full + 1];
    fn solve(g: &SimpleGraph, mask: usize, memo: &mut [u8]) -> u8 {
        if mask == 0 {
            return 0;
        }
        if memo[mask] != u8::MAX {
            return memo[mask];
        }
        let v = mask.trailing_zeros() as usize;
        let mut best = solve(g, mask & !(1 << v), memo);
        for &u in g.neighbors(v) {
            if mask >> u & 1 == 1 && u != v {
                best = best.max(1 + solve(g, mask & !(1 << v) & !(1 << u), memo));
            }
        }
        memo[mask] = best;
        best
    }
    solve(g, full, &mut memo) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &e)
    }

    pub fn petersen() -> SimpleGraph {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5)); // outer cycle
            e.push((i, i + 5)); // spokes
            e.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        SimpleGraph::from_edges(10, &e)
    }

    #[test]
    fn examples() {
        assert_eq!(max_matching(&path(3)).len(), 1);
        assert_eq!(max_matching(&complete(4)).len(), 2);
        assert_eq!(max_matching(&petersen()).len(), 5);
    }

    #[test]
    fn petersen_brute_confirms_perfect() {
        assert_eq!(brute_max_matching_size(&petersen()), 5);
    }

    #[test]
    fn odd_cycle_needs_blossom() {
        // Triangle with a pendant: matching size 2.
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        let m = max_matching(&g);
        assert_eq!(m.len(), 2);
        assert!(m.is_valid());
    }

    #[test]
    fn random_graphs_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(3);
        for _ in 0..120 {
            let n = rng.gen_range(1..=9);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        e.push((u, v));
                    }
                }
            }
            let g = SimpleGraph::from_edges(n, &e);
            let m = max_matching(&g);
            assert!(m.is_valid());
            for &(u, v) in &m.edges {
                assert!(g.has_edge(u, v));
            }
            assert_eq!(m.len(), brute_max_matching_size(&g), "edges={e:?}");
        }
    }
}
