//! Perfect matchings split across the two colors under a 3n/4 minimum
//! degree: every 2-coloring of an even-order graph with min degree at least
//! 3n/4 has a perfect matching consisting of a red connected matching plus
//! a blue connected matching. The construction finds the largest
//! monochromatic component, patches the graph so each color's matching
//! edges stay inside one component, and extracts the matching from a
//! Hamiltonian cycle (dense cases) or directly (spanning case).

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, CycleSeq, SimpleGraph, VertexSet};
use crate::matching::max_matching;
use serde::Serialize;

/// A perfect matching of the graph split into its red and blue parts; each
/// part is a connected matching (possibly empty) witnessed by one
/// monochromatic component.
#[derive(Clone, Debug, Serialize)]
pub struct MatchingSplit {
    pub red_edges: Vec<(usize, usize)>,
    pub red_witness: Option<usize>,
    pub blue_edges: Vec<(usize, usize)>,
    pub blue_witness: Option<usize>,
}

impl MatchingSplit {
    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        let mut check = |edges: &[(usize, usize)], color: Color| -> Result<()> {
            for &(u, v) in edges {
                if g.color_of(u, v) != Some(color) {
                    return Err(Error::contradiction(format!(
                        "({u},{v}) is not a {color} edge"
                    )));
                }
                for w in [u, v] {
                    if seen[w] {
                        return Err(Error::contradiction(format!("vertex {w} matched twice")));
                    }
                    seen[w] = true;
                }
            }
            if !edges.is_empty() {
                let ids = g.component_ids(color);
                let comp = ids[edges[0].0];
                if !edges.iter().all(|&(u, v)| ids[u] == comp && ids[v] == comp) {
                    return Err(Error::contradiction(format!(
                        "{color} matching spans several components"
                    )));
                }
            }
            Ok(())
        };
        check(&self.red_edges, Color::Red)?;
        check(&self.blue_edges, Color::Blue)?;
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::contradiction(format!(
                "vertex {v} left unmatched; the split is not a perfect matching"
            )));
        }
        Ok(())
    }
}

/// Audit record of which proof case ran and on what component structure.
#[derive(Clone, Debug, Serialize)]
pub struct CaseTrace {
    /// 1: largest component is not spanning; 2: spanning with small private
    /// part; 3: spanning with large private part.
    pub case: u8,
    pub c1_color: Color,
    pub c1: VertexSet,
    pub c2: VertexSet,
    /// |C1 \ C2| and |C2 \ C1|.
    pub p: usize,
    pub q: usize,
    /// Edges deleted to form the patched graph.
    pub deleted_edges: Vec<(usize, usize)>,
}

fn ceil_3n4(n: usize) -> usize {
    (3 * n).div_ceil(4)
}

/// Largest monochromatic component; ties prefer red, then the component
/// with the smallest minimum vertex.
fn largest_monochromatic_component(g: &ColoredGraph) -> (Color, VertexSet) {
    let mut best: Option<(Color, VertexSet)> = None;
    for color in Color::BOTH {
        for comp in g.monochromatic_components(color) {
            let better = match &best {
                None => true,
                Some((_, b)) => comp.len() > b.len(),
            };
            if better {
                best = Some((color, comp));
            }
        }
    }
    best.expect("graph has at least one vertex")
}

/// Splits a perfect matching of `g` into a red connected matching and a
/// vertex-disjoint blue connected matching. Requires n even and min degree
/// at least ceil(3n/4).
pub fn degmatch_split(g: &ColoredGraph) -> Result<(MatchingSplit, CaseTrace)> {
    let n = g.n();
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::precondition(format!("n = {n} must be even and positive")));
    }
    let need = ceil_3n4(n);
    let delta = g.min_degree();
    if delta < need {
        return Err(Error::precondition(format!(
            "min degree {delta} below required {need} (= ceil(3n/4))"
        )));
    }

    let (c1_color, c1) = largest_monochromatic_component(g);
    if 4 * c1.len() < 3 * n {
        return Err(Error::contradiction(format!(
            "largest monochromatic component has {} vertices, below 3n/4",
            c1.len()
        )));
    }
    let c2_color = c1_color.opposite();
    let in_c1 = {
        let mut b = vec![false; n];
        for &v in &c1 {
            b[v] = true;
        }
        b
    };
    let outside: Vec<usize> = (0..n).filter(|&v| !in_c1[v]).collect();

    let c2: VertexSet = if !outside.is_empty() {
        // Every vertex outside C1 has at least n/2 neighbors in the other
        // color, so one component of that color covers all of them.
        let ids = g.component_ids(c2_color);
        let comp_id = ids[outside[0]];
        if !outside.iter().all(|&v| ids[v] == comp_id) {
            return Err(Error::contradiction(
                "vertices outside the largest component fall in several components \
                 of the other color",
            ));
        }
        g.monochromatic_components(c2_color)
            .into_iter()
            .find(|c| c.contains(&outside[0]))
            .unwrap()
    } else {
        g.monochromatic_components(c2_color)
            .into_iter()
            .max_by_key(|c| c.len())
            .unwrap_or_default()
    };

    let in_c2 = {
        let mut b = vec![false; n];
        for &v in &c2 {
            b[v] = true;
        }
        b
    };
    let p = c1.iter().filter(|&&v| !in_c2[v]).count();
    let q = c2.iter().filter(|&&v| !in_c1[v]).count();
    if p < q {
        return Err(Error::contradiction(format!("p = {p} < q = {q}")));
    }

    // Patch: drop other-color edges inside C1\C2 and same-color edges
    // inside C2\C1, so every surviving edge of each color sits inside that
    // color's big component.
    let mut deleted = Vec::new();
    for &(u, v, c) in g.edges() {
        let private_c1 = in_c1[u] && !in_c2[u] && in_c1[v] && !in_c2[v];
        let private_c2 = in_c2[u] && !in_c1[u] && in_c2[v] && !in_c1[v];
        if (private_c1 && c == c2_color) || (private_c2 && c == c1_color) {
            deleted.push((u, v));
        }
    }
    let patched = g.without_edges(&deleted);
    let view = patched.view(None);

    let case = if c1.len() < n {
        1
    } else if 2 * p <= n {
        2
    } else {
        3
    };

    let perfect: Vec<(usize, usize)> = match case {
        1 | 2 => {
            let cycle = hamiltonian_cycle(&view).map_err(|e| {
                Error::contradiction(format!(
                    "case {case}: patched graph should be Hamiltonian: {e}"
                ))
            })?;
            cycle
                .vertices
                .chunks(2)
                .map(|pair| (pair[0], pair[1]))
                .collect()
        }
        _ => {
            let m = max_matching(&view);
            if 2 * m.len() != n {
                return Err(Error::contradiction(
                    "case 3: patched graph should have a perfect matching",
                ));
            }
            m.edges
        }
    };

    let mut red_edges = Vec::new();
    let mut blue_edges = Vec::new();
    for &(u, v) in &perfect {
        match g.color_of(u, v) {
            Some(Color::Red) => red_edges.push((u.min(v), u.max(v))),
            Some(Color::Blue) => blue_edges.push((u.min(v), u.max(v))),
            None => {
                return Err(Error::contradiction(format!(
                    "matching edge ({u},{v}) is not in the graph"
                )))
            }
        }
    }
    red_edges.sort_unstable();
    blue_edges.sort_unstable();
    let witness = |edges: &[(usize, usize)], color: Color| -> Option<usize> {
        edges.first().map(|&(u, _)| g.component_ids(color)[u])
    };
    let split = MatchingSplit {
        red_witness: witness(&red_edges, Color::Red),
        blue_witness: witness(&blue_edges, Color::Blue),
        red_edges,
        blue_edges,
    };
    split.validate(g)?;
    let trace = CaseTrace { case, c1_color, c1, c2, p, q, deleted_edges: deleted };
    Ok((split, trace))
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles via the Bondy-Chvátal closure
// ---------------------------------------------------------------------------

/// Degree-sequence property used as the checked precondition: with degrees
/// sorted ascending (1-indexed), d_k + d_{n-k} >= n for every k <= n/2.
/// Min degree n/2 is the special case where every summand is >= n/2.
pub fn chvatal_property(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut d: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    (1..=n / 2).all(|k| d[k - 1] + d[n - k - 1] >= n)
}

/// Walks a connected 2-regular graph as a cycle.
fn walk_cycle(g: &SimpleGraph) -> Vec<usize> {
    let mut seq = vec![0usize];
    let mut prev = usize::MAX;
    loop {
        let cur = *seq.last().unwrap();
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| u != prev)
            .expect("2-regular vertex has a forward neighbor");
        if next == 0 {
            break;
        }
        prev = cur;
        seq.push(next);
    }
    seq
}

/// Constructs a Hamiltonian cycle. Accepts graphs that are themselves a
/// spanning cycle; otherwise requires the degree-sequence property above,
/// closes the graph by repeatedly joining non-adjacent pairs with degree
/// sum >= n, takes the canonical cycle of the complete closure and unwinds
/// the closure edges by crossing-pair exchanges, newest first.
pub fn hamiltonian_cycle(g: &SimpleGraph) -> Result<CycleSeq> {
    let n = g.n();
    if n < 3 {
        return Err(Error::precondition(format!("need n >= 3 for a cycle, got {n}")));
    }
    if g.is_connected() && (0..n).all(|v| g.degree(v) == 2) {
        let seq = walk_cycle(g);
        return Ok(CycleSeq { vertices: seq, color: None });
    }
    if !chvatal_property(g) {
        return Err(Error::precondition(
            "degree sequence fails d_k + d_{n-k} >= n for some k <= n/2",
        ));
    }

    // Closure: adjacency matrix plus the insertion-ordered list of added
    // edges. Scanning pairs lexicographically until a fixpoint keeps the
    // construction deterministic.
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut deg = vec![0usize; n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            adj[v][u] = true;
        }
        deg[v] = g.degree(v);
    }
    let mut added: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut inserted = false;
        for u in 0..n {
            for v in u + 1..n {
                if !adj[u][v] && deg[u] + deg[v] >= n {
                    adj[u][v] = true;
                    adj[v][u] = true;
                    deg[u] += 1;
                    deg[v] += 1;
                    added.push((u, v));
                    inserted = true;
                }
            }
        }
        if !inserted {
            break;
        }
    }
    if !(0..n).all(|u| (0..n).all(|v| u == v || adj[u][v])) {
        return Err(Error::contradiction(
            "closure of a graph with the degree property must be complete",
        ));
    }

    let mut cycle: Vec<usize> = (0..n).collect();
    for &(u, v) in added.iter().rev() {
        adj[u][v] = false;
        adj[v][u] = false;
        // Rewire only if the current cycle uses the retired edge.
        let pos = (0..n).find(|&i| {
            let a = cycle[i];
            let b = cycle[(i + 1) % n];
            (a == u && b == v) || (a == v && b == u)
        });
        let Some(i) = pos else { continue };
        // Rotate the cycle into a path x_0 = u', ..., x_{n-1} = v' whose
        // missing edge is (u, v).
        let path: Vec<usize> = (0..n).map(|k| cycle[(i + 1 + k) % n]).collect();
        debug_assert!(
            (path[0] == u && path[n - 1] == v) || (path[0] == v && path[n - 1] == u)
        );
        let (a, b) = (path[0], path[n - 1]);
        // Crossing pair: b ~ path[j] and a ~ path[j+1]; degree sums at
        // insertion time guarantee one exists.
        let j = (0..n - 1)
            .find(|&j| adj[b][path[j]] && adj[a][path[j + 1]])
            .ok_or_else(|| Error::contradiction("no crossing pair while unwinding closure"))?;
        let mut next: Vec<usize> = path[..=j].to_vec();
        next.extend(path[j + 1..].iter().rev());
        cycle = next;
        let _ = (a, b);
    }

    // Every edge of the final cycle must be a real edge of g.
    for k in 0..n {
        let (a, b) = (cycle[k], cycle[(k + 1) % n]);
        if !g.has_edge(a, b) {
            return Err(Error::contradiction(format!(
                "unwound cycle uses non-edge ({a},{b})"
            )));
        }
    }
    Ok(CycleSeq { vertices: cycle, color: None })
}

// ---------------------------------------------------------------------------
// Tutte diagnostic
// ---------------------------------------------------------------------------

/// Exhaustive search for a Tutte violator: a vertex set X such that
/// deleting X leaves more than |X| odd components. Returns `None` when the
/// graph has a perfect matching. Diagnostic only; capped at n <= 20.
pub fn tutte_violator(g: &SimpleGraph) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > 20 {
        return Err(Error::CapExceeded { what: "tutte_violator", n, cap: 20 });
    }
    for mask in 0u32..(1u32 << n) {
        let kept: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        let (sub, _) = g.induced(&kept);
        let odd = sub.components().iter().filter(|c| c.len() % 2 == 1).count();
        if odd > mask.count_ones() as usize {
            return Ok(Some((0..n).filter(|&v| mask >> v & 1 == 1).collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn all_red_complete_graph_splits_red() {
        for n in [4usize, 6, 8] {
            let g = ColoredGraph::complete(n, |_, _| Color::Red);
            let (split, trace) = degmatch_split(&g).unwrap();
            assert_eq!(split.red_edges.len(), n / 2);
            assert!(split.blue_edges.is_empty());
            assert_eq!(trace.case, 3, "spanning red component with large private part");
        }
    }

    #[test]
    fn two_red_triangles_with_blue_bipartite() {
        let g = ColoredGraph::complete(6, |u, v| {
            let same_side = (u < 3) == (v < 3);
            if same_side {
                Color::Red
            } else {
                Color::Blue
            }
        });
        let (split, trace) = degmatch_split(&g).unwrap();
        split.validate(&g).unwrap();
        assert_eq!(trace.c1_color, Color::Blue);
        assert_eq!(trace.case, 2);
        assert_eq!(split.red_edges.len() + split.blue_edges.len(), 3);
    }

    #[test]
    fn sharpness_construction_is_rejected() {
        let g = generators::sharpness4(2, 7).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.min_degree(), 5);
        assert!(matches!(degmatch_split(&g), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn odd_n_rejected() {
        let g = ColoredGraph::complete(5, |_, _| Color::Red);
        assert!(matches!(degmatch_split(&g), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn hamiltonian_on_bare_cycles() {
        for n in [3usize, 5, 8] {
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let g = SimpleGraph::from_edges(n, &edges);
            let cyc = hamiltonian_cycle(&g).unwrap();
            assert_eq!(cyc.len(), n);
        }
    }

    #[test]
    fn hamiltonian_k4_minus_edge() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let cyc = hamiltonian_cycle(&g).unwrap();
        assert_eq!(cyc.len(), 4);
        for k in 0..4 {
            assert!(g.has_edge(cyc.vertices[k], cyc.vertices[(k + 1) % 4]));
        }
    }

    #[test]
    fn chvatal_failure_rejected() {
        // Degree sequence (2,2,3,3,4,4): d_2 + d_4 = 5 < 6.
        let g = SimpleGraph::from_edges(
            6,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), // C6
                (0, 2), (3, 5), (0, 3),
            ],
        );
        let mut degs: Vec<usize> = (0..6).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3, 4, 4]);
        assert!(!chvatal_property(&g));
        assert!(matches!(hamiltonian_cycle(&g), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn hamiltonian_dense_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(12);
        for _ in 0..60 {
            let n = rng.gen_range(4..=12);
            // Dirac-dense graphs: keep removing only while degrees allow.
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            let mut g = SimpleGraph::from_edges(n, &edges);
            for _ in 0..n {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v && g.has_edge(u, v) && g.degree(u) > n.div_ceil(2) && g.degree(v) > n.div_ceil(2) {
                    let kept: Vec<(usize, usize)> = g
                        .edges()
                        .into_iter()
                        .filter(|&e| e != (u.min(v), u.max(v)))
                        .collect();
                    g = SimpleGraph::from_edges(n, &kept);
                }
            }
            let cyc = hamiltonian_cycle(&g).unwrap();
            assert_eq!(cyc.len(), n);
            for k in 0..n {
                assert!(g.has_edge(cyc.vertices[k], cyc.vertices[(k + 1) % n]));
            }
        }
    }

    #[test]
    fn tutte_examples() {
        let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(tutte_violator(&k4).unwrap(), None);

        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(tutte_violator(&star).unwrap(), Some(vec![0]));

        let two_triangles = SimpleGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        );
        assert_eq!(tutte_violator(&two_triangles).unwrap(), Some(vec![]));
    }

    #[test]
    fn random_degree_instances_split() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(2024);
        for n in [8usize, 12] {
            for _ in 0..40 {
                let g = generators::min_degree(n, 0.75, rng.gen()).unwrap();
                let (split, trace) = degmatch_split(&g).unwrap();
                split.validate(&g).unwrap();
                assert!(4 * trace.c1.len() >= 3 * n);
                assert!(trace.p >= trace.q);
            }
        }
    }
}
