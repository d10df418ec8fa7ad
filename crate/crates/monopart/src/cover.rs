//! Minimum covers of the vertex set by monochromatic components.
//!
//! The red components and blue components of a colored graph form the two
//! sides of a bipartite multigraph with one edge per graph vertex (joining
//! the red and blue components containing it). A maximum matching of that
//! dual equals the largest set of vertices no two of which share any
//! monochromatic component, and the König vertex cover built from the
//! matching picks out components whose vertex sets cover the whole graph.

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, VertexSet};
use serde::Serialize;

/// Bipartite multigraph dual: one edge per graph vertex, joining the red
/// component and the blue component that contain it. Parallel edges arise
/// when two vertices share both components and are kept distinct.
#[derive(Clone, Debug)]
pub struct DualMultigraph {
    /// Red components (left side), ordered by minimum vertex.
    pub red_components: Vec<VertexSet>,
    /// Blue components (right side), ordered by minimum vertex.
    pub blue_components: Vec<VertexSet>,
    /// `edge[v] = (red component index, blue component index)` for vertex v.
    pub edge: Vec<(usize, usize)>,
}

impl DualMultigraph {
    pub fn build(g: &ColoredGraph) -> Self {
        let red_components = g.monochromatic_components(Color::Red);
        let blue_components = g.monochromatic_components(Color::Blue);
        let red_of = g.component_ids(Color::Red);
        let blue_of = g.component_ids(Color::Blue);
        let edge = (0..g.n()).map(|v| (red_of[v], blue_of[v])).collect();
        DualMultigraph { red_components, blue_components, edge }
    }

    /// Maximum matching on the dual, reported as graph vertices (one per
    /// matched dual edge). Deterministic: augmenting searches run from left
    /// nodes in index order and each (left, right) cell is witnessed by its
    /// smallest vertex.
    pub fn max_matching_vertices(&self) -> Vec<usize> {
        let p = self.red_components.len();
        let q = self.blue_components.len();
        // Smallest witness vertex per (red comp, blue comp) cell.
        let mut witness = std::collections::BTreeMap::new();
        for (v, &(r, b)) in self.edge.iter().enumerate() {
            witness.entry((r, b)).or_insert(v);
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); p];
        for (&(r, b), &v) in &witness {
            adj[r].push((b, v));
        }
        // Kuhn's augmenting-path matching; sizes here are tiny.
        let mut match_right = vec![usize::MAX; q];
        let mut match_left = vec![usize::MAX; p];
        for left in 0..p {
            let mut seen = vec![false; q];
            try_augment(left, &adj, &mut seen, &mut match_left, &mut match_right);
        }
        let mut verts: Vec<usize> = (0..p)
            .filter(|&l| match_left[l] != usize::MAX)
            .map(|l| witness[&(l, match_left[l])])
            .collect();
        verts.sort_unstable();
        verts
    }

    /// König minimum vertex cover of the dual from a maximum matching:
    /// alternating-reachability from unmatched left nodes; the cover is
    /// (left not reached) union (right reached). Returns (red component
    /// indices, blue component indices).
    pub fn koenig_cover(&self) -> (Vec<usize>, Vec<usize>) {
        let p = self.red_components.len();
        let q = self.blue_components.len();
        let mut witness = std::collections::BTreeMap::new();
        for (v, &(r, b)) in self.edge.iter().enumerate() {
            witness.entry((r, b)).or_insert(v);
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); p];
        for (&(r, b), &v) in &witness {
            adj[r].push((b, v));
        }
        let mut match_right = vec![usize::MAX; q];
        let mut match_left = vec![usize::MAX; p];
        for left in 0..p {
            let mut seen = vec![false; q];
            try_augment(left, &adj, &mut seen, &mut match_left, &mut match_right);
        }
        // Alternating BFS from unmatched left nodes: left-to-right along
        // non-matching edges, right-to-left along matching ones.
        let mut left_visited = vec![false; p];
        let mut right_visited = vec![false; q];
        let mut stack: Vec<usize> = (0..p).filter(|&l| match_left[l] == usize::MAX).collect();
        for &l in &stack {
            left_visited[l] = true;
        }
        while let Some(l) = stack.pop() {
            for &(r, _) in &adj[l] {
                if !right_visited[r] {
                    right_visited[r] = true;
                    let l2 = match_right[r];
                    if l2 != usize::MAX && !left_visited[l2] {
                        left_visited[l2] = true;
                        stack.push(l2);
                    }
                }
            }
        }
        let red_cover: Vec<usize> = (0..p).filter(|&l| !left_visited[l]).collect();
        let blue_cover: Vec<usize> = (0..q).filter(|&r| right_visited[r]).collect();
        (red_cover, blue_cover)
    }
}

fn try_augment(
    left: usize,
    adj: &[Vec<(usize, usize)>],
    seen: &mut [bool],
    match_left: &mut [usize],
    match_right: &mut [usize],
) -> bool {
    for &(right, _) in &adj[left] {
        if !seen[right] {
            seen[right] = true;
            if match_right[right] == usize::MAX
                || try_augment(match_right[right], adj, seen, match_left, match_right)
            {
                match_right[right] = left;
                match_left[left] = right;
                return true;
            }
        }
    }
    false
}

/// A minimum cover of the vertex set by monochromatic components, together
/// with its König certificate.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentCover {
    /// Chosen components: red ones first (by component index), then blue.
    pub components: Vec<(Color, VertexSet)>,
    /// Certificate: vertices no two of which share a monochromatic
    /// component; its size equals the cover size by König equality.
    pub matching: Vec<usize>,
}

impl ComponentCover {
    pub fn size(&self) -> usize {
        self.components.len()
    }

    /// Re-validates both certificates against the graph: the chosen
    /// components cover every vertex, König equality holds, and the
    /// matching vertices are pairwise in distinct components of each color.
    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        let mut covered = vec![false; g.n()];
        for (_, comp) in &self.components {
            for &v in comp {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::contradiction(format!("vertex {v} not covered")));
        }
        if self.components.len() != self.matching.len() {
            return Err(Error::contradiction(format!(
                "König equality violated: cover {} vs matching {}",
                self.components.len(),
                self.matching.len()
            )));
        }
        for color in Color::BOTH {
            let ids = g.component_ids(color);
            let mut seen = std::collections::HashSet::new();
            for &v in &self.matching {
                if !seen.insert(ids[v]) {
                    return Err(Error::contradiction(format!(
                        "matching vertices share a {color} component"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Minimum number of monochromatic components covering the vertex set;
/// equals the maximum number of vertices pairwise sharing no component.
pub fn alpha_star(g: &ColoredGraph) -> usize {
    DualMultigraph::build(g).max_matching_vertices().len()
}

/// Computes a minimum cover of V by monochromatic component vertex sets,
/// with the dual matching as certificate. The cover size always equals
/// `alpha_star(g)` and never exceeds the independence number.
pub fn component_cover(g: &ColoredGraph) -> Result<ComponentCover> {
    let dual = DualMultigraph::build(g);
    let matching = dual.max_matching_vertices();
    let (red_idx, blue_idx) = dual.koenig_cover();
    let mut components = Vec::with_capacity(red_idx.len() + blue_idx.len());
    for &i in &red_idx {
        components.push((Color::Red, dual.red_components[i].clone()));
    }
    for &j in &blue_idx {
        components.push((Color::Blue, dual.blue_components[j].clone()));
    }
    let cover = ComponentCover { components, matching };
    cover.validate(g)?;
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;

    #[test]
    fn all_red_connected_cover_is_one() {
        let g = ColoredGraph::complete(5, |_, _| Color::Red);
        let cover = component_cover(&g).unwrap();
        assert_eq!(cover.size(), 1);
        assert_eq!(alpha_star(&g), 1);
        assert_eq!(cover.components[0].0, Color::Red);
        assert_eq!(cover.components[0].1, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn edgeless_graph_needs_n_components() {
        let g = ColoredGraph::from_edges(5, &[]).unwrap();
        assert_eq!(alpha_star(&g), 5);
        let cover = component_cover(&g).unwrap();
        assert_eq!(cover.size(), 5);
    }

    #[test]
    fn ks_blocks_cover_size_k() {
        for (k, s) in [(2usize, 3usize), (3, 4), (4, 5)] {
            let g = crate::generators::ks_blocks(k, s).unwrap();
            let cover = component_cover(&g).unwrap();
            assert_eq!(cover.size(), k, "k={k} s={s}");
            assert_eq!(alpha_star(&g), k);
            // The red star component of each block spans the block.
            assert!(cover.components.iter().all(|(c, _)| *c == Color::Red));
        }
    }

    #[test]
    fn every_two_coloring_of_k6_has_spanning_component() {
        // One color of any 2-colored complete graph always has a spanning
        // component, so the cover size is 1. Checked over all 2^15
        // colorings of K6.
        let pairs: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| ((u + 1)..6).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << 15) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| {
                    let c = if mask >> i & 1 == 1 { Color::Red } else { Color::Blue };
                    (u, v, c)
                })
                .collect();
            let g = ColoredGraph::from_edges(6, &edges).unwrap();
            assert_eq!(alpha_star(&g), 1, "mask={mask}");
        }
    }

    #[test]
    fn koenig_equality_and_alpha_bound_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(42);
        for _ in 0..150 {
            let n = rng.gen_range(1..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        let c = if rng.gen_bool(0.5) { Color::Red } else { Color::Blue };
                        edges.push((u, v, c));
                    }
                }
            }
            let g = ColoredGraph::from_edges(n, &edges).unwrap();
            let cover = component_cover(&g).unwrap();
            cover.validate(&g).unwrap();
            assert_eq!(cover.size(), alpha_star(&g));
            assert!(cover.size() <= g.independence_number().unwrap());
        }
    }

    #[test]
    fn parallel_dual_edges_are_harmless() {
        // Two vertices sharing both their red and blue component produce
        // parallel dual edges; the matching still has one edge per cell.
        let g = ColoredGraph::from_edges(
            4,
            &[(0, 1, Color::Red), (2, 3, Color::Red), (0, 2, Color::Blue), (1, 3, Color::Blue)],
        )
        .unwrap();
        // Red comps {0,1},{2,3}; blue comps {0,2},{1,3}: 4 distinct cells.
        assert_eq!(alpha_star(&g), 2);
        let cover = component_cover(&g).unwrap();
        assert_eq!(cover.size(), 2);
    }
}
